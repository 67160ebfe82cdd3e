#include "uacat/variety.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace uacat {

std::string to_string(VarietyTag tag) {
    switch (tag) {
        case VarietyTag::magma: return "magma";
        case VarietyTag::semigroup: return "semigroup";
        case VarietyTag::monoid: return "monoid";
        case VarietyTag::inverse_semigroup: return "inverse_semigroup";
    }
    throw error("bad variety tag");
}

VarietyTag variety_tag_from_string(std::string_view name) {
    if (name == "magma") return VarietyTag::magma;
    if (name == "semigroup") return VarietyTag::semigroup;
    if (name == "monoid") return VarietyTag::monoid;
    if (name == "inverse_semigroup") return VarietyTag::inverse_semigroup;
    throw error("unknown variety '" + std::string(name) + "'");
}

Variety Variety::magma() { return Variety(VarietyTag::magma); }
Variety Variety::semigroup() { return Variety(VarietyTag::semigroup); }
Variety Variety::monoid() { return Variety(VarietyTag::monoid); }
Variety Variety::inverse_semigroup() { return Variety(VarietyTag::inverse_semigroup); }
Variety Variety::from_tag(VarietyTag tag) { return Variety(tag); }

const Signature& Variety::signature() const {
    static const Signature mul_only({{"mul", 2}});
    static const Signature with_unit({{"mul", 2}, {"unit", 0}});
    static const Signature with_inv({{"mul", 2}, {"inv", 1}});
    switch (tag_) {
        case VarietyTag::magma:
        case VarietyTag::semigroup: return mul_only;
        case VarietyTag::monoid: return with_unit;
        case VarietyTag::inverse_semigroup: return with_inv;
    }
    throw error("bad variety tag");
}

std::vector<std::pair<Term, Term>> Variety::defining_identities() const {
    const Signature& sig = signature();
    auto p = [&](const char* s) { return parse_term(s, sig); };
    switch (tag_) {
        case VarietyTag::magma: return {};
        case VarietyTag::semigroup:
            return {{p("(mul (mul x1 x2) x3)"), p("(mul x1 (mul x2 x3))")}};
        case VarietyTag::monoid:
            return {{p("(mul (mul x1 x2) x3)"), p("(mul x1 (mul x2 x3))")},
                    {p("(mul x1 (unit))"), p("x1")},
                    {p("(mul (unit) x1)"), p("x1")}};
        case VarietyTag::inverse_semigroup:
            return {{p("(mul (mul x1 x2) x3)"), p("(mul x1 (mul x2 x3))")},
                    {p("(inv (mul x1 x2))"), p("(mul (inv x2) (inv x1))")},
                    {p("(inv (inv x1))"), p("x1")},
                    {p("(mul (mul x1 (inv x1)) x1)"), p("x1")},
                    {p("(mul (mul (inv x1) x1) (mul (inv x2) x2))"),
                     p("(mul (mul (inv x2) x2) (mul (inv x1) x1))")}};
    }
    throw error("bad variety tag");
}

namespace {

// Adjacency view used while folding a word into its tree.
struct TreeBuilder {
    // out[v][label] = w  means edge v --label--> w
    std::vector<std::map<int, int>> out, in;

    int add_vertex() {
        out.emplace_back();
        in.emplace_back();
        return static_cast<int>(out.size()) - 1;
    }
};

struct Neighbor {
    int label;
    bool outgoing;  // edge current --label--> next
    int next;
};

std::vector<Neighbor> sorted_neighbors(const TreeBuilder& tb, int v) {
    std::vector<Neighbor> ns;
    for (const auto& [label, w] : tb.out[v]) ns.push_back({label, true, w});
    for (const auto& [label, w] : tb.in[v]) ns.push_back({label, false, w});
    std::sort(ns.begin(), ns.end(), [](const Neighbor& a, const Neighbor& b) {
        if (a.label != b.label) return a.label < b.label;
        return a.outgoing && !b.outgoing;
    });
    return ns;
}

void dfs_serialize(const TreeBuilder& tb, int v, int parent, int end, std::string& out) {
    if (v == end) out += '*';
    for (const Neighbor& n : sorted_neighbors(tb, v)) {
        if (n.next == parent) continue;
        out += '[';
        out += n.outgoing ? '+' : '-';
        out += std::to_string(n.label);
        dfs_serialize(tb, n.next, v, end, out);
        out += ']';
    }
}

// Representative word: traverse every edge down and back in canonical order,
// then walk from start to end.
void dfs_cover(const TreeBuilder& tb, int v, int parent, std::vector<int>& word) {
    for (const Neighbor& n : sorted_neighbors(tb, v)) {
        if (n.next == parent) continue;
        word.push_back(n.outgoing ? n.label : -n.label);
        dfs_cover(tb, n.next, v, word);
        word.push_back(n.outgoing ? -n.label : n.label);
    }
}

bool dfs_path(const TreeBuilder& tb, int v, int parent, int target, std::vector<int>& word) {
    if (v == target) return true;
    for (const Neighbor& n : sorted_neighbors(tb, v)) {
        if (n.next == parent) continue;
        word.push_back(n.outgoing ? n.label : -n.label);
        if (dfs_path(tb, n.next, v, target, word)) return true;
        word.pop_back();
    }
    return false;
}

}  // namespace

MunnTree munn_of_word(const std::vector<int>& letters) {
    if (letters.empty()) throw error("empty word has no inverse-semigroup element");
    TreeBuilder tb;
    int start = tb.add_vertex();
    int cur = start;
    for (int letter : letters) {
        if (letter == 0) throw error("zero letter in signed word");
        int label = letter > 0 ? letter : -letter;
        if (letter > 0) {
            auto it = tb.out[cur].find(label);
            if (it != tb.out[cur].end()) {
                cur = it->second;
            } else {
                int next = tb.add_vertex();
                tb.out[cur][label] = next;
                tb.in[next][label] = cur;
                cur = next;
            }
        } else {
            auto it = tb.in[cur].find(label);
            if (it != tb.in[cur].end()) {
                cur = it->second;
            } else {
                int next = tb.add_vertex();
                tb.out[next][label] = cur;
                tb.in[cur][label] = next;
                cur = next;
            }
        }
    }
    MunnTree m;
    m.start = start;
    m.end = cur;
    for (int v = 0; v < static_cast<int>(tb.out.size()); ++v)
        for (const auto& [label, w] : tb.out[v]) m.edges.push_back({v, w, label});
    dfs_serialize(tb, start, -1, m.end, m.canonical);
    dfs_cover(tb, start, -1, m.rep_word);
    std::vector<int> path;
    dfs_path(tb, start, -1, m.end, path);
    m.rep_word.insert(m.rep_word.end(), path.begin(), path.end());
    m.min_word_length = 2 * static_cast<int>(m.edges.size()) - static_cast<int>(path.size());
    return m;
}

std::vector<int> signed_word(const Term& t) {
    validate_term(t, Variety::inverse_semigroup().signature());
    std::vector<int> out;
    std::function<void(const Term&, bool)> flat = [&](const Term& u, bool inverted) {
        if (u.is_var()) {
            out.push_back(inverted ? -u.var_index() : u.var_index());
            return;
        }
        if (u.op() == "inv") {
            flat(u.args()[0], !inverted);
            return;
        }
        // mul: (ab)^-1 = b^-1 a^-1
        if (inverted) {
            flat(u.args()[1], true);
            flat(u.args()[0], true);
        } else {
            flat(u.args()[0], false);
            flat(u.args()[1], false);
        }
    };
    flat(t, false);
    return out;
}

MunnTree munn_tree(const Term& t) { return munn_of_word(signed_word(t)); }

Term invert(const Term& t) { return Term::app("inv", {t}); }

std::string NormalForm::key() const {
    switch (tag_) {
        case VarietyTag::magma: return term().render();
        case VarietyTag::semigroup:
        case VarietyTag::monoid: {
            std::string out;
            for (std::size_t i = 0; i < word().size(); ++i) {
                if (i) out += ',';
                out += std::to_string(word()[i]);
            }
            return out;
        }
        case VarietyTag::inverse_semigroup: return munn().canonical;
    }
    throw error("bad variety tag");
}

int NormalForm::size() const {
    switch (tag_) {
        case VarietyTag::magma: return term().size();
        case VarietyTag::semigroup:
        case VarietyTag::monoid: return static_cast<int>(word().size());
        case VarietyTag::inverse_semigroup: return munn().min_word_length;
    }
    throw error("bad variety tag");
}

int NormalForm::max_var() const {
    switch (tag_) {
        case VarietyTag::magma: return term().max_var();
        case VarietyTag::semigroup:
        case VarietyTag::monoid: {
            int m = 0;
            for (int v : word()) m = std::max(m, v);
            return m;
        }
        case VarietyTag::inverse_semigroup: {
            int m = 0;
            for (const auto& e : munn().edges) m = std::max(m, e.label);
            return m;
        }
    }
    throw error("bad variety tag");
}

bool NormalForm::operator<(const NormalForm& o) const {
    if (size() != o.size()) return size() < o.size();
    return key() < o.key();
}

namespace {

void flatten_word(const Term& t, bool allow_unit, Word& out) {
    if (t.is_var()) {
        out.push_back(t.var_index());
        return;
    }
    if (t.op() == "unit") {
        if (!allow_unit) throw error("unit symbol outside monoid");
        return;
    }
    flatten_word(t.args()[0], allow_unit, out);
    flatten_word(t.args()[1], allow_unit, out);
}

}  // namespace

NormalForm normalize(const Term& t, const Variety& v) {
    validate_term(t, v.signature());
    switch (v.tag()) {
        case VarietyTag::magma: return NormalForm(v.tag(), t);
        case VarietyTag::semigroup: {
            Word w;
            flatten_word(t, false, w);
            return NormalForm(v.tag(), std::move(w));
        }
        case VarietyTag::monoid: {
            Word w;
            flatten_word(t, true, w);
            return NormalForm(v.tag(), std::move(w));
        }
        case VarietyTag::inverse_semigroup:
            return NormalForm(v.tag(), munn_tree(t));
    }
    throw error("bad variety tag");
}

bool equal_in_free(const Term& t1, const Term& t2, const Variety& v) {
    return normalize(t1, v) == normalize(t2, v);
}

bool identity_holds(const Term& lhs, const Term& rhs, const Variety& v) {
    // For these varieties an identity holds iff both sides coincide in the
    // free algebra on the identity's variables.
    return equal_in_free(lhs, rhs, v);
}

namespace {

Term word_to_term(const Word& w) {
    if (w.empty()) return Term::app("unit", {});
    Term t = Term::var(w[0]);
    for (std::size_t i = 1; i < w.size(); ++i)
        t = Term::app("mul", {std::move(t), Term::var(w[i])});
    return t;
}

Term signed_word_to_term(const std::vector<int>& w) {
    auto literal = [](int letter) {
        return letter > 0 ? Term::var(letter) : Term::app("inv", {Term::var(-letter)});
    };
    Term t = literal(w[0]);
    for (std::size_t i = 1; i < w.size(); ++i)
        t = Term::app("mul", {std::move(t), literal(w[i])});
    return t;
}

Term mirror_term(const Term& t) {
    if (t.is_var()) return t;
    if (t.op() == "mul")
        return Term::app("mul", {mirror_term(t.args()[1]), mirror_term(t.args()[0])});
    std::vector<Term> args;
    for (const auto& a : t.args()) args.push_back(mirror_term(a));
    return Term::app(t.op(), std::move(args));
}

}  // namespace

Term nf_to_term(const NormalForm& n, const Variety& v) {
    switch (v.tag()) {
        case VarietyTag::magma: return n.term();
        case VarietyTag::semigroup:
            if (n.word().empty()) throw error("empty semigroup word");
            return word_to_term(n.word());
        case VarietyTag::monoid: return word_to_term(n.word());
        case VarietyTag::inverse_semigroup: return signed_word_to_term(n.munn().rep_word);
    }
    throw error("bad variety tag");
}

NormalForm reverse_element(const NormalForm& n, const Variety& v) {
    switch (v.tag()) {
        case VarietyTag::magma: return normalize(mirror_term(n.term()), v);
        case VarietyTag::semigroup:
        case VarietyTag::monoid: {
            Word w = n.word();
            std::reverse(w.begin(), w.end());
            return NormalForm(v.tag(), std::move(w));
        }
        case VarietyTag::inverse_semigroup: {
            std::vector<int> w = n.munn().rep_word;
            std::reverse(w.begin(), w.end());
            return NormalForm(v.tag(), munn_of_word(w));
        }
    }
    throw error("bad variety tag");
}

}  // namespace uacat
