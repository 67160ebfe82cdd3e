#include "uacat/automorphism.hpp"

#include <algorithm>
#include <random>

namespace uacat {

FreeObject AutomorphismSpec::apply_object(const FreeObject& a) const {
    auto it = object_action.find(a.key());
    return it == object_action.end() ? a : it->second;
}

std::optional<Morphism> AutomorphismSpec::apply(const Morphism& m) const {
    switch (kind) {
        case SpecKind::identity: return m;
        case SpecKind::mirror: {
            std::vector<NormalForm> images;
            images.reserve(m.images.size());
            for (const auto& img : m.images)
                images.push_back(reverse_element(img, m.cod.variety));
            return Morphism{m.dom, m.cod, std::move(images)};
        }
        case SpecKind::table: {
            auto it = table.find(m.key());
            if (it == table.end()) return std::nullopt;
            return it->second.second;
        }
    }
    throw error("bad spec kind");
}

AutomorphismSpec identity_spec() { return AutomorphismSpec{}; }

AutomorphismSpec mirror_spec() {
    AutomorphismSpec s;
    s.kind = SpecKind::mirror;
    return s;
}

const NormalForm* PartialBijection::image(const NormalForm& a) const {
    for (const auto& [from, to] : pairs)
        if (from == a) return &to;
    return nullptr;
}

const NormalForm* PartialBijection::preimage(const NormalForm& b) const {
    for (const auto& [from, to] : pairs)
        if (to == b) return &from;
    return nullptr;
}

bool PartialBijection::injective() const {
    std::vector<std::string> keys;
    for (const auto& [from, to] : pairs) keys.push_back(to.key());
    std::sort(keys.begin(), keys.end());
    return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

PartialBijection PartialBijection::inverse() const {
    PartialBijection inv;
    for (const auto& [from, to] : pairs) inv.pairs.emplace_back(to, from);
    return inv;
}

void PartialBijection::add(NormalForm from, NormalForm to) {
    pairs.emplace_back(std::move(from), std::move(to));
}

bool Report::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) {
        return c.status == CheckResult::Status::pass;
    });
}

bool Report::has_gap() const {
    return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) {
        return c.status == CheckResult::Status::gap;
    });
}

void Report::add(std::string name, CheckResult::Status status, std::string detail) {
    checks.push_back({std::move(name), status, std::move(detail)});
}

PartialBijection extract_s(const AutomorphismSpec& phi, const FreeObject& a, int bound) {
    FreeObject a0(a.variety, 1);
    if (!(phi.apply_object(a0) == a0))
        throw error("extract_s: spec does not preserve the rank-1 object");
    PartialBijection s;
    for (const auto& elem : enumerate_elements(a, bound)) {
        std::optional<Morphism> img = phi.apply(alpha(elem, a));
        if (!img)
            throw error("extract_s: spec undefined on alpha_a for a = " + elem.key());
        s.add(elem, img->images[0]);
    }
    return s;
}

PartialBijection family_from_term(const Term& u, const FreeObject& a, int bound) {
    PartialBijection c;
    for (const auto& elem : enumerate_elements(a, bound)) {
        Substitution sub;
        sub.set(1, nf_to_term(elem, a.variety));
        c.add(elem, normalize(substitute(u, sub), a.variety));
    }
    return c;
}

PartialBijection family_from_generator_permutation(const std::vector<int>& perm,
                                                   const FreeObject& a, int bound) {
    std::vector<NormalForm> images;
    for (int i = 1; i <= a.rank; ++i) {
        int target = i <= static_cast<int>(perm.size()) ? perm[i - 1] : i;
        if (target < 1 || target > a.rank) throw error("permutation target out of range");
        images.push_back(generator(a, target));
    }
    Morphism pi = theta(a, images);
    PartialBijection c;
    for (const auto& elem : enumerate_elements(a, bound))
        c.add(elem, apply_morphism(pi, elem));
    return c;
}

namespace {

const PartialBijection* family_for(const BijectionFamily& fam, const FreeObject& obj) {
    auto it = fam.find(obj.key());
    return it == fam.end() ? nullptr : &it->second;
}

}  // namespace

Report verify_conjugation(const AutomorphismSpec& phi, const BijectionFamily& s,
                          const std::vector<Morphism>& sample) {
    Report report;
    for (const auto& nu : sample) {
        std::string name = "conjugation " + nu.key();
        const PartialBijection* s_a = family_for(s, nu.dom);
        const PartialBijection* s_b = family_for(s, nu.cod);
        if (!s_a || !s_b) {
            report.add(name, CheckResult::Status::gap, "family undefined on an object");
            continue;
        }
        std::optional<Morphism> phi_nu = phi.apply(nu);
        if (!phi_nu) {
            report.add(name, CheckResult::Status::gap, "spec undefined on morphism");
            continue;
        }
        bool ok = true;
        bool covered = false;
        std::string detail;
        for (const auto& [a, sa] : s_a->pairs) {
            const NormalForm* expected = s_b->image(apply_morphism(nu, a));
            if (!expected) continue;
            covered = true;
            NormalForm actual = apply_morphism(*phi_nu, sa);
            if (!(actual == *expected)) {
                ok = false;
                detail = "at a = " + a.key();
                break;
            }
        }
        if (!covered)
            report.add(name, CheckResult::Status::gap, "no covered table entries");
        else
            report.add(name, ok ? CheckResult::Status::pass : CheckResult::Status::fail, detail);
    }
    return report;
}

Report check_central(const BijectionFamily& c, const std::vector<Morphism>& sample) {
    Report report;
    for (const auto& mu : sample) {
        std::string name = "central " + mu.key();
        const PartialBijection* c_a = family_for(c, mu.dom);
        const PartialBijection* c_b = family_for(c, mu.cod);
        if (!c_a || !c_b) {
            report.add(name, CheckResult::Status::gap, "family undefined on an object");
            continue;
        }
        bool ok = true;
        bool covered = false;
        std::string detail;
        for (const auto& [a, ca] : c_a->pairs) {
            const NormalForm* expected = c_b->image(apply_morphism(mu, a));
            if (!expected) continue;
            covered = true;
            NormalForm actual = apply_morphism(mu, ca);
            if (!(actual == *expected)) {
                ok = false;
                detail = "at a = " + a.key();
                break;
            }
        }
        if (!covered)
            report.add(name, CheckResult::Status::gap, "no covered table entries");
        else
            report.add(name, ok ? CheckResult::Status::pass : CheckResult::Status::fail, detail);
    }
    return report;
}

std::vector<Morphism> sample_morphisms(const Variety& v, int max_rank, int elem_bound,
                                       std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<NormalForm>> pools;
    for (int r = 1; r <= max_rank; ++r)
        pools.push_back(enumerate_elements(FreeObject(v, r), elem_bound));
    std::vector<Morphism> out;
    std::uniform_int_distribution<int> rank_dist(1, max_rank);
    while (out.size() < count) {
        int dr = rank_dist(rng);
        int cr = rank_dist(rng);
        const auto& pool = pools[cr - 1];
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        std::vector<NormalForm> images;
        for (int i = 0; i < dr; ++i) images.push_back(pool[pick(rng)]);
        out.push_back(Morphism{FreeObject(v, dr), FreeObject(v, cr), std::move(images)});
    }
    return out;
}

InnerVerdict decide_inner_via_central(const AutomorphismSpec& phi, const Variety& v,
                                      const TermAssignment& star_assignment, int term_bound,
                                      int elem_bound, std::uint64_t seed) {
    DerivedAlgebra star = build_derived_algebra(v, star_assignment);
    FreeObject a2(v, phi.apply_object(FreeObject(v, 2)).rank);
    if (!(phi.apply_object(FreeObject(v, 2)) == FreeObject(v, 2)))
        return {InnerVerdictKind::inconclusive, std::nullopt, "spec moves the rank-2 object"};

    std::vector<Morphism> sample = sample_morphisms(v, 2, elem_bound, 60, seed);
    std::vector<NormalForm> elems = enumerate_elements(a2, elem_bound);

    auto try_candidate = [&](const Term& u) -> bool {
        BijectionFamily fam;
        for (int r = 1; r <= 2; ++r) {
            FreeObject obj(v, r);
            fam[obj.key()] = family_from_term(u, obj, elem_bound);
            if (!fam[obj.key()].injective()) return false;
        }
        if (!check_central(fam, sample).all_passed()) return false;
        // c must be an isomorphism from Phi(A) onto A^Phi on sampled operations
        const PartialBijection& c = fam[a2.key()];
        for (const auto& op : v.signature().ops()) {
            if (op.arity == 0) continue;
            std::vector<std::size_t> idx(op.arity, 0);
            for (;;) {
                std::vector<NormalForm> args, mapped;
                for (int i = 0; i < op.arity; ++i) {
                    args.push_back(elems[idx[i]]);
                    mapped.push_back(*c.image(elems[idx[i]]));
                }
                std::vector<Term> arg_terms;
                for (const auto& a : args) arg_terms.push_back(nf_to_term(a, v));
                NormalForm applied = normalize(Term::app(op.name, arg_terms), v);
                const NormalForm* lhs = c.image(applied);
                if (lhs && !(*lhs == derived_apply(star, op.name, mapped))) return false;
                int k = op.arity - 1;
                for (; k >= 0; --k) {
                    if (++idx[k] < elems.size()) break;
                    idx[k] = 0;
                }
                if (k < 0) break;
            }
        }
        return true;
    };

    try {
        for (const auto& u : enumerate_terms(v.signature(), {1}, term_bound)) {
            if (try_candidate(u))
                return {InnerVerdictKind::inner_witness, u, "central family a -> " + u.render()};
        }
        // generator-transposition candidates
        for (const std::vector<int>& perm : {std::vector<int>{2, 1}}) {
            BijectionFamily fam;
            bool usable = true;
            for (int r = 1; r <= 2; ++r) {
                FreeObject obj(v, r);
                if (static_cast<int>(perm.size()) > r) {
                    // permutation does not act on lower-rank objects; fix them
                    fam[obj.key()] = family_from_generator_permutation({}, obj, elem_bound);
                } else {
                    fam[obj.key()] = family_from_generator_permutation(perm, obj, elem_bound);
                }
                if (!fam[obj.key()].injective()) usable = false;
            }
            if (!usable) continue;
            if (!check_central(fam, sample).all_passed()) continue;
            const PartialBijection& c = fam[a2.key()];
            bool ok = true;
            for (const auto& op : v.signature().ops()) {
                if (op.arity != 2 || !ok) continue;
                for (const auto& x : elems) {
                    for (const auto& y : elems) {
                        std::vector<Term> ts = {nf_to_term(x, v), nf_to_term(y, v)};
                        NormalForm applied = normalize(Term::app(op.name, ts), v);
                        const NormalForm* lhs = c.image(applied);
                        if (lhs && !(*lhs == derived_apply(star, op.name,
                                                           {*c.image(x), *c.image(y)}))) {
                            ok = false;
                            break;
                        }
                    }
                    if (!ok) break;
                }
            }
            if (ok)
                return {InnerVerdictKind::inner_witness, std::nullopt,
                        "central family: generator transposition"};
        }
    } catch (const cap_exceeded& e) {
        return {InnerVerdictKind::inconclusive, std::nullopt, e.what()};
    }
    return {InnerVerdictKind::not_inner_up_to_bound, std::nullopt,
            "no central isomorphism among unary-term candidates up to size " +
                std::to_string(term_bound)};
}

Report derived_equals_star(const AutomorphismSpec& phi, const FreeObject& a, int bound) {
    Report report;
    const Variety& v = a.variety;
    if (!(phi.apply_object(a) == a)) {
        report.add("object fixed", CheckResult::Status::fail, "spec moves the object");
        return report;
    }
    // hypothesis: the generator point-morphisms are fixed
    bool gens_fixed = true;
    for (int i = 1; i <= a.rank; ++i) {
        std::optional<Morphism> img = phi.apply(alpha(generator(a, i), a));
        if (!img || !(img->images[0] == generator(a, i))) gens_fixed = false;
    }
    report.add("generator points fixed",
               gens_fixed ? CheckResult::Status::pass : CheckResult::Status::fail);
    if (!gens_fixed) return report;

    int s_bound = bound + v.signature().max_arity() * bound + 2;
    PartialBijection s = extract_s(phi, a, s_bound);
    PartialBijection s_inv = s.inverse();

    for (const auto& op : v.signature().ops()) {
        if (op.arity == 0 || op.arity > a.rank) continue;
        // omega^Phi(x1..xk) = s(omega(x1..xk))
        std::vector<Term> gen_args;
        for (int i = 1; i <= op.arity; ++i) gen_args.push_back(Term::var(i));
        NormalForm omega_gen = normalize(Term::app(op.name, gen_args), v);
        const NormalForm* image = s.image(omega_gen);
        if (!image) {
            report.add("omega^Phi " + op.name, CheckResult::Status::gap,
                       "s undefined on omega(x1..xk)");
            continue;
        }
        TermAssignment assign;
        assign.set(op.name, nf_to_term(*image, v));
        DerivedAlgebra d{v, assign};

        std::vector<NormalForm> elems = enumerate_elements(a, bound);
        bool ok = true;
        int checked = 0;
        std::string detail;
        std::vector<std::size_t> idx(op.arity, 0);
        for (;;) {
            std::vector<NormalForm> args, pre;
            bool covered = true;
            for (int i = 0; i < op.arity; ++i) {
                args.push_back(elems[idx[i]]);
                const NormalForm* p = s_inv.image(elems[idx[i]]);
                if (!p) {
                    covered = false;
                    break;
                }
                pre.push_back(*p);
            }
            if (covered) {
                std::vector<Term> ts;
                for (const auto& p : pre) ts.push_back(nf_to_term(p, v));
                NormalForm inner = normalize(Term::app(op.name, ts), v);
                const NormalForm* star_val = s.image(inner);
                if (star_val) {
                    ++checked;
                    NormalForm derived_val = derived_apply(d, op.name, args);
                    if (!(*star_val == derived_val)) {
                        ok = false;
                        detail = "mismatch at " + args[0].key();
                        break;
                    }
                }
            }
            int k = op.arity - 1;
            for (; k >= 0; --k) {
                if (++idx[k] < elems.size()) break;
                idx[k] = 0;
            }
            if (k < 0) break;
        }
        if (checked == 0)
            report.add("omega* = omega^Phi for " + op.name, CheckResult::Status::gap,
                       "no covered argument tuples");
        else
            report.add("omega* = omega^Phi for " + op.name,
                       ok ? CheckResult::Status::pass : CheckResult::Status::fail, detail);
    }
    return report;
}

Report reduction_check(const AutomorphismSpec& phi, const ReductionScenario& scenario) {
    Report report;
    const FreeObject& f0 = scenario.f0;
    const FreeObject& fsup = scenario.fsup;
    if (f0.rank != 1) throw error("reduction scenario: representing object must have rank 1");

    bool objects_fixed = phi.apply_object(f0) == f0 && phi.apply_object(fsup) == fsup;
    report.add("condition 1: objects unchanged",
               objects_fixed ? CheckResult::Status::pass : CheckResult::Status::fail);

    // condition 2: identity on END(F^0), on the bounded part
    bool end_fixed = true;
    std::string end_detail;
    bool end_gap = false;
    for (const auto& mu : hom_set(fsup, fsup, scenario.bound)) {
        std::optional<Morphism> img = phi.apply(mu);
        if (!img) {
            end_gap = true;
            continue;
        }
        if (!(*img == mu)) {
            end_fixed = false;
            end_detail = "moved " + mu.key();
            break;
        }
    }
    if (end_gap && end_fixed)
        report.add("condition 2: END(F^0) fixed", CheckResult::Status::gap, "table gaps");
    else
        report.add("condition 2: END(F^0) fixed",
                   end_fixed ? CheckResult::Status::pass : CheckResult::Status::fail, end_detail);

    // condition 3: nu0 preserved
    std::vector<NormalForm> x0_images(fsup.rank, generator(f0, 1));
    Morphism nu0{fsup, f0, x0_images};
    std::optional<Morphism> nu0_img = phi.apply(nu0);
    if (!nu0_img)
        report.add("condition 3: nu0 preserved", CheckResult::Status::gap, "table gap");
    else
        report.add("condition 3: nu0 preserved",
                   *nu0_img == nu0 ? CheckResult::Status::pass : CheckResult::Status::fail);

    bool all_conditions = report.all_passed();
    if (all_conditions) {
        // conclusion mechanism: Phi(mu) = mu for mu: F0 -> F^0
        bool ok = true;
        std::string detail;
        for (const auto& elem : enumerate_elements(fsup, scenario.bound)) {
            Morphism mu = alpha(elem, fsup);
            std::optional<Morphism> img = phi.apply(mu);
            if (!img) continue;
            if (!(*img == mu)) {
                ok = false;
                detail = "moved alpha_" + elem.key();
                break;
            }
        }
        report.add("conclusion: Hom(F0, F^0) fixed",
                   ok ? CheckResult::Status::pass : CheckResult::Status::fail, detail);
    }
    return report;
}

Report check_functor(const AutomorphismSpec& phi,
                     const std::vector<std::pair<Morphism, Morphism>>& composable_pairs) {
    Report report;
    std::vector<std::string> seen_objects;
    for (const auto& [g, f] : composable_pairs) {
        for (const FreeObject* obj : {&f.dom, &f.cod, &g.cod}) {
            if (std::find(seen_objects.begin(), seen_objects.end(), obj->key()) !=
                seen_objects.end())
                continue;
            seen_objects.push_back(obj->key());
            std::optional<Morphism> id_img = phi.apply(identity_morphism(*obj));
            FreeObject target = phi.apply_object(*obj);
            if (!id_img)
                report.add("identity preserved at " + obj->key(), CheckResult::Status::gap);
            else
                report.add("identity preserved at " + obj->key(),
                           *id_img == identity_morphism(target) ? CheckResult::Status::pass
                                                                : CheckResult::Status::fail);
        }
        std::string name = "composition " + g.key() + " o " + f.key();
        std::optional<Morphism> img_g = phi.apply(g);
        std::optional<Morphism> img_f = phi.apply(f);
        std::optional<Morphism> img_gf = phi.apply(compose(g, f));
        if (!img_g || !img_f || !img_gf) {
            report.add(name, CheckResult::Status::gap);
            continue;
        }
        report.add(name, *img_gf == compose(*img_g, *img_f) ? CheckResult::Status::pass
                                                            : CheckResult::Status::fail);
    }
    return report;
}

bool potential_inner(const AutomorphismSpec& phi, const Variety& v) {
    // bijectivity of the declared object action
    std::vector<std::string> targets;
    for (const auto& [from, to] : phi.object_action) targets.push_back(to.key());
    std::sort(targets.begin(), targets.end());
    if (std::adjacent_find(targets.begin(), targets.end()) != targets.end()) return false;
    FreeObject a0(v, 1);
    return phi.apply_object(a0).rank == 1 && phi.apply_object(a0).variety == v;
}

}  // namespace uacat
