#pragma once

#include <vector>

#include "uacat/variety.hpp"

namespace uacat {

// A finitely generated free object of the category, determined by its
// variety and the number of free generators x1..x_rank.
struct FreeObject {
    Variety variety;
    int rank;

    FreeObject(Variety v, int r) : variety(v), rank(r) {
        if (r < 1) throw error("free object rank must be >= 1");
    }
    bool operator==(const FreeObject& o) const {
        return variety == o.variety && rank == o.rank;
    }
    std::string key() const;
};

// A morphism between free objects, stored extensionally as the normalized
// images of the domain's generators.
struct Morphism {
    FreeObject dom;
    FreeObject cod;
    std::vector<NormalForm> images;

    bool operator==(const Morphism& o) const;
    std::string key() const;
};

Morphism make_morphism(const FreeObject& dom, const FreeObject& cod,
                       const std::vector<Term>& images);
Morphism identity_morphism(const FreeObject& a);

NormalForm apply_morphism(const Morphism& m, const NormalForm& a);

// compose(g, f) = g after f
Morphism compose(const Morphism& g, const Morphism& f);

NormalForm generator(const FreeObject& a, int index);

// The unique morphism from the rank-1 object with x0 |-> a.
Morphism alpha(const NormalForm& a, const FreeObject& a_obj);

// The endomorphism of A sending generator i to f[i].
Morphism theta(const FreeObject& a, const std::vector<NormalForm>& f);

// All elements of the free algebra on `rank` generators of size <= max_size,
// in (size, key) order, duplicate-free.
std::vector<NormalForm> enumerate_elements(const FreeObject& a, int max_size,
                                           std::size_t cap = kDefaultEnumCap);

// All morphisms A -> B whose generator images have size <= max_size.
std::vector<Morphism> hom_set(const FreeObject& a, const FreeObject& b, int max_size,
                              std::size_t cap = kDefaultEnumCap);

}  // namespace uacat
