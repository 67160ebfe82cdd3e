#include "uacat/category.hpp"

#include <algorithm>
#include <functional>

namespace uacat {

std::string FreeObject::key() const {
    return to_string(variety.tag()) + "/" + std::to_string(rank);
}

bool Morphism::operator==(const Morphism& o) const {
    return dom == o.dom && cod == o.cod && images == o.images;
}

std::string Morphism::key() const {
    std::string out = dom.key() + "->" + cod.key() + ":[";
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (i) out += ';';
        out += images[i].key();
    }
    out += ']';
    return out;
}

Morphism make_morphism(const FreeObject& dom, const FreeObject& cod,
                       const std::vector<Term>& images) {
    if (static_cast<int>(images.size()) != dom.rank)
        throw error("morphism needs " + std::to_string(dom.rank) + " generator images, got " +
                    std::to_string(images.size()));
    std::vector<NormalForm> nfs;
    nfs.reserve(images.size());
    for (const auto& t : images) {
        if (t.max_var() > cod.rank)
            throw error("image uses generator beyond codomain rank");
        nfs.push_back(normalize(t, cod.variety));
    }
    return Morphism{dom, cod, std::move(nfs)};
}

Morphism identity_morphism(const FreeObject& a) {
    std::vector<NormalForm> images;
    for (int i = 1; i <= a.rank; ++i) images.push_back(generator(a, i));
    return Morphism{a, a, std::move(images)};
}

NormalForm apply_morphism(const Morphism& m, const NormalForm& a) {
    if (a.max_var() > m.dom.rank)
        throw error("element uses generators beyond domain rank");
    Term reading = nf_to_term(a, m.dom.variety);
    Substitution s;
    for (int i = 1; i <= m.dom.rank; ++i)
        s.set(i, nf_to_term(m.images[i - 1], m.cod.variety));
    return normalize(substitute(reading, s), m.cod.variety);
}

Morphism compose(const Morphism& g, const Morphism& f) {
    if (!(f.cod == g.dom)) throw error("compose: domain/codomain mismatch");
    std::vector<NormalForm> images;
    images.reserve(f.images.size());
    for (const auto& img : f.images) images.push_back(apply_morphism(g, img));
    return Morphism{f.dom, g.cod, std::move(images)};
}

NormalForm generator(const FreeObject& a, int index) {
    if (index < 1 || index > a.rank) throw error("generator index out of range");
    return normalize(Term::var(index), a.variety);
}

Morphism alpha(const NormalForm& a, const FreeObject& a_obj) {
    if (a.max_var() > a_obj.rank) throw error("element uses generators beyond object rank");
    FreeObject dom(a_obj.variety, 1);
    return Morphism{dom, a_obj, {a}};
}

Morphism theta(const FreeObject& a, const std::vector<NormalForm>& f) {
    if (static_cast<int>(f.size()) != a.rank)
        throw error("theta needs one image per generator");
    for (const auto& nf : f)
        if (nf.max_var() > a.rank) throw error("theta image beyond object rank");
    return Morphism{a, a, f};
}

namespace {

std::vector<NormalForm> magma_elements(const FreeObject& a, int max_size, std::size_t cap) {
    std::vector<int> vars;
    for (int i = 1; i <= a.rank; ++i) vars.push_back(i);
    std::vector<NormalForm> out;
    for (const auto& t : enumerate_terms(a.variety.signature(), vars, max_size, cap))
        out.push_back(normalize(t, a.variety));
    return out;
}

std::vector<NormalForm> word_elements(const FreeObject& a, int max_size, std::size_t cap,
                                      bool with_empty) {
    std::vector<NormalForm> out;
    std::size_t total = 0;
    if (with_empty) {
        out.emplace_back(a.variety.tag(), Word{});
        ++total;
    }
    Word w;
    std::function<void(int)> gen = [&](int remaining) {
        if (!w.empty()) {
            if (++total > cap) throw cap_exceeded("enumerate_elements", cap);
            out.emplace_back(a.variety.tag(), w);
        }
        if (remaining == 0) return;
        for (int i = 1; i <= a.rank; ++i) {
            w.push_back(i);
            gen(remaining - 1);
            w.pop_back();
        }
    };
    gen(max_size);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<NormalForm> inverse_elements(const FreeObject& a, int max_size, std::size_t cap) {
    std::vector<NormalForm> out;
    std::vector<std::string> seen;
    std::size_t total = 0;
    std::vector<int> w;
    std::function<void(int)> gen = [&](int remaining) {
        if (!w.empty()) {
            if (++total > cap) throw cap_exceeded("enumerate_elements", cap);
            NormalForm nf(VarietyTag::inverse_semigroup, munn_of_word(w));
            if (nf.size() <= max_size) {
                std::string k = nf.key();
                if (!std::binary_search(seen.begin(), seen.end(), k)) {
                    seen.insert(std::lower_bound(seen.begin(), seen.end(), k), k);
                    out.push_back(std::move(nf));
                }
            }
        }
        if (remaining == 0) return;
        for (int i = 1; i <= a.rank; ++i) {
            for (int letter : {i, -i}) {
                w.push_back(letter);
                gen(remaining - 1);
                w.pop_back();
            }
        }
    };
    gen(max_size);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<NormalForm> enumerate_elements(const FreeObject& a, int max_size, std::size_t cap) {
    if (max_size < 1) throw error("max_size must be >= 1");
    switch (a.variety.tag()) {
        case VarietyTag::magma: return magma_elements(a, max_size, cap);
        case VarietyTag::semigroup: return word_elements(a, max_size, cap, false);
        case VarietyTag::monoid: return word_elements(a, max_size, cap, true);
        case VarietyTag::inverse_semigroup: return inverse_elements(a, max_size, cap);
    }
    throw error("bad variety tag");
}

std::vector<Morphism> hom_set(const FreeObject& a, const FreeObject& b, int max_size,
                              std::size_t cap) {
    std::vector<NormalForm> pool = enumerate_elements(b, max_size, cap);
    std::vector<Morphism> out;
    std::vector<std::size_t> idx(a.rank, 0);
    std::size_t total = 0;
    if (pool.empty()) return out;
    for (;;) {
        std::vector<NormalForm> images;
        images.reserve(a.rank);
        for (int i = 0; i < a.rank; ++i) images.push_back(pool[idx[i]]);
        if (++total > cap) throw cap_exceeded("hom_set", cap);
        out.push_back(Morphism{a, b, std::move(images)});
        int k = a.rank - 1;
        for (; k >= 0; --k) {
            if (++idx[k] < pool.size()) break;
            idx[k] = 0;
        }
        if (k < 0) break;
    }
    return out;
}

}  // namespace uacat
