from ._uacat import (
    CapExceeded,
    Error,
    FiniteAlgebra,
    NormalForm,
    Term,
    all_monoid_automorphisms_inner,
    all_semilattices,
    check_mutual_derivability,
    enumerate_elements,
    enumerate_terms,
    equal_in_free,
    homomorphisms,
    identity_holds,
    load_table_file,
    mirror_is_inner,
    munn_canonical,
    normalize,
    parse_term,
    right_indicator,
    solve_system,
    transformation_monoid,
)

__all__ = [
    "CapExceeded",
    "Error",
    "FiniteAlgebra",
    "NormalForm",
    "Term",
    "all_monoid_automorphisms_inner",
    "all_semilattices",
    "check_mutual_derivability",
    "enumerate_elements",
    "enumerate_terms",
    "equal_in_free",
    "homomorphisms",
    "identity_holds",
    "load_table_file",
    "mirror_is_inner",
    "munn_canonical",
    "normalize",
    "parse_term",
    "right_indicator",
    "solve_system",
    "transformation_monoid",
]
