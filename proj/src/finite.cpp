#include "uacat/finite.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

namespace uacat {

namespace {

std::size_t table_size(int carrier, int arity) {
    std::size_t s = 1;
    for (int i = 0; i < arity; ++i) s *= static_cast<std::size_t>(carrier);
    return s;
}

// iterate all argument tuples of the given arity over {0..n-1}
bool next_tuple(std::vector<int>& t, int n) {
    for (int k = static_cast<int>(t.size()) - 1; k >= 0; --k) {
        if (++t[k] < n) return true;
        t[k] = 0;
    }
    return false;
}

}  // namespace

FiniteAlgebra::FiniteAlgebra(int carrier, Signature sig) : n_(carrier), sig_(std::move(sig)) {
    if (carrier < 1) throw error("carrier must be nonempty");
    tables_.resize(sig_.ops().size());
}

int FiniteAlgebra::op_index(const std::string& op) const {
    for (std::size_t i = 0; i < sig_.ops().size(); ++i)
        if (sig_.ops()[i].name == op) return static_cast<int>(i);
    throw error("unknown operation " + op);
}

void FiniteAlgebra::set_table(const std::string& op, std::vector<int> table) {
    int i = op_index(op);
    if (table.size() != table_size(n_, sig_.ops()[i].arity))
        throw error("wrong table size for " + op);
    for (int v : table)
        if (v < 0 || v >= n_) throw error("table entry out of carrier for " + op);
    tables_[i] = std::move(table);
}

int FiniteAlgebra::apply(const std::string& op, const std::vector<int>& args) const {
    int i = op_index(op);
    if (static_cast<int>(args.size()) != sig_.ops()[i].arity)
        throw error("arity mismatch applying " + op);
    std::size_t idx = 0;
    for (int a : args) {
        if (a < 0 || a >= n_) throw error("argument out of carrier applying " + op);
        idx = idx * n_ + static_cast<std::size_t>(a);
    }
    return tables_[i][idx];
}

const std::vector<int>& FiniteAlgebra::table(const std::string& op) const {
    return tables_[op_index(op)];
}

int FiniteAlgebra::eval(const Term& t, const std::vector<int>& env) const {
    if (t.is_var()) {
        if (t.var_index() > static_cast<int>(env.size()))
            throw error("eval: unbound variable x" + std::to_string(t.var_index()));
        return env[t.var_index() - 1];
    }
    std::vector<int> args;
    for (const auto& a : t.args()) args.push_back(eval(a, env));
    return apply(t.op(), args);
}

FiniteAlgebra load_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open table file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    // strip comments
    std::string clean;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        clean += line;
        clean += '\n';
    }
    std::istringstream ts(clean);
    std::string kw;
    int carrier = 0;
    if (!(ts >> kw >> carrier) || kw != "carrier")
        throw error(path + ": expected 'carrier N'");
    std::vector<Signature::Op> ops;
    std::vector<std::vector<int>> tables;
    while (ts >> kw) {
        if (kw != "op") throw error(path + ": expected 'op NAME ARITY'");
        std::string name;
        int arity;
        if (!(ts >> name >> arity)) throw error(path + ": malformed op header");
        std::vector<int> table(table_size(carrier, arity));
        for (auto& v : table)
            if (!(ts >> v)) throw error(path + ": truncated table for " + name);
        ops.push_back({name, arity});
        tables.push_back(std::move(table));
    }
    FiniteAlgebra a(carrier, Signature(ops));
    for (std::size_t i = 0; i < ops.size(); ++i) a.set_table(ops[i].name, tables[i]);
    return a;
}

std::string table_file_text(const FiniteAlgebra& a) {
    std::ostringstream out;
    out << "carrier " << a.carrier() << "\n";
    for (const auto& op : a.signature().ops()) {
        out << "op " << op.name << " " << op.arity << "\n";
        const auto& table = a.table(op.name);
        std::size_t row = op.arity >= 1 ? table_size(a.carrier(), op.arity - 1) : 1;
        for (std::size_t i = 0; i < table.size(); ++i) {
            out << table[i];
            out << (((i + 1) % row == 0) ? '\n' : ' ');
        }
    }
    return out.str();
}

bool is_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b, const FiniteMap& h) {
    for (const auto& op : a.signature().ops()) {
        std::vector<int> args(op.arity, 0);
        if (op.arity == 0) {
            if (h[a.apply(op.name, {})] != b.apply(op.name, {})) return false;
            continue;
        }
        do {
            std::vector<int> mapped(op.arity);
            for (int i = 0; i < op.arity; ++i) mapped[i] = h[args[i]];
            if (h[a.apply(op.name, args)] != b.apply(op.name, mapped)) return false;
        } while (next_tuple(args, a.carrier()));
    }
    return true;
}

std::vector<FiniteMap> homomorphisms(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    for (std::size_t i = 0; i < a.signature().ops().size(); ++i) {
        const auto& oa = a.signature().ops()[i];
        const auto* ob = b.signature().find(oa.name);
        if (!ob || ob->arity != oa.arity) throw error("signature mismatch");
    }
    std::vector<FiniteMap> out;
    FiniteMap h(a.carrier(), -1);

    // prune: every fully assigned operation tuple must already commute
    auto consistent = [&](int upto) {
        for (const auto& op : a.signature().ops()) {
            if (op.arity == 0) {
                int c = a.apply(op.name, {});
                if (c <= upto && h[c] != b.apply(op.name, {})) return false;
                continue;
            }
            std::vector<int> args(op.arity, 0);
            do {
                bool ready = true;
                for (int x : args)
                    if (x > upto) ready = false;
                if (!ready) continue;
                int image = a.apply(op.name, args);
                if (image > upto) continue;
                std::vector<int> mapped(op.arity);
                for (int i = 0; i < op.arity; ++i) mapped[i] = h[args[i]];
                if (h[image] != b.apply(op.name, mapped)) return false;
            } while (next_tuple(args, a.carrier()));
        }
        return true;
    };

    std::function<void(int)> search = [&](int v) {
        if (v == a.carrier()) {
            out.push_back(h);
            return;
        }
        for (int val = 0; val < b.carrier(); ++val) {
            h[v] = val;
            if (consistent(v)) search(v + 1);
        }
        h[v] = -1;
    };
    search(0);
    return out;
}

bool is_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b, const FiniteMap& s) {
    if (a.carrier() != b.carrier()) return false;
    std::vector<bool> hit(b.carrier(), false);
    for (int v : s) {
        if (v < 0 || v >= b.carrier() || hit[v]) return false;
        hit[v] = true;
    }
    return is_homomorphism(a, b, s);
}

namespace {

IndicatorResult indicator_check(const FiniteAlgebra& a0,
                                const std::vector<FiniteAlgebra>& universe, int max_carrier,
                                bool right) {
    for (const auto& alg : universe)
        if (alg.carrier() > max_carrier)
            throw cap_exceeded("indicator check carrier", static_cast<std::size_t>(max_carrier));
    for (std::size_t ia = 0; ia < universe.size(); ++ia) {
        for (std::size_t ib = 0; ib < universe.size(); ++ib) {
            const FiniteAlgebra& a = universe[ia];
            const FiniteAlgebra& b = universe[ib];
            if (a.carrier() != b.carrier()) continue;  // no bijections
            std::vector<FiniteMap> homs =
                right ? homomorphisms(b, a0) : homomorphisms(a0, a);
            FiniteMap s(a.carrier());
            std::iota(s.begin(), s.end(), 0);
            do {
                bool hypothesis = true;
                for (const auto& nu : homs) {
                    FiniteMap composite(a.carrier());
                    if (right) {
                        // (nu o s): A -> A0 must be a homomorphism
                        for (int x = 0; x < a.carrier(); ++x) composite[x] = nu[s[x]];
                        if (!is_homomorphism(a, a0, composite)) {
                            hypothesis = false;
                            break;
                        }
                    } else {
                        // (s o nu): A0 -> B must be a homomorphism
                        composite.assign(a0.carrier(), 0);
                        for (int x = 0; x < a0.carrier(); ++x) composite[x] = s[nu[x]];
                        if (!is_homomorphism(a0, b, composite)) {
                            hypothesis = false;
                            break;
                        }
                    }
                }
                if (hypothesis && !is_isomorphism(a, b, s))
                    return {false, IndicatorCertificate{ia, ib, s}};
            } while (std::next_permutation(s.begin(), s.end()));
        }
    }
    return {true, std::nullopt};
}

}  // namespace

IndicatorResult is_right_indicator(const FiniteAlgebra& a0,
                                   const std::vector<FiniteAlgebra>& universe, int max_carrier) {
    return indicator_check(a0, universe, max_carrier, true);
}

IndicatorResult is_left_indicator(const FiniteAlgebra& a0,
                                  const std::vector<FiniteAlgebra>& universe, int max_carrier) {
    return indicator_check(a0, universe, max_carrier, false);
}

std::vector<int> decode_transformation(int element, int n, bool partial) {
    int base = partial ? n + 1 : n;
    std::vector<int> map(n);
    for (int x = 0; x < n; ++x) {
        map[x] = element % base;
        element /= base;
    }
    return map;
}

int encode_transformation(const std::vector<int>& map, int n, bool partial) {
    int base = partial ? n + 1 : n;
    int e = 0;
    for (int x = n - 1; x >= 0; --x) {
        if (map[x] < 0 || map[x] >= base) throw error("bad transformation value");
        e = e * base + map[x];
    }
    return e;
}

FiniteAlgebra transformation_monoid(int n, bool partial) {
    if (n < 1) throw error("n must be >= 1");
    if ((partial && n > 3) || (!partial && n > 4))
        throw cap_exceeded("transformation_monoid", partial ? 3 : 4);
    int base = partial ? n + 1 : n;
    int count = 1;
    for (int i = 0; i < n; ++i) count *= base;

    FiniteAlgebra m(count, Signature({{"mul", 2}}));
    std::vector<int> table(static_cast<std::size_t>(count) * count);
    for (int f = 0; f < count; ++f) {
        std::vector<int> fm = decode_transformation(f, n, partial);
        for (int g = 0; g < count; ++g) {
            std::vector<int> gm = decode_transformation(g, n, partial);
            std::vector<int> fg(n);
            for (int x = 0; x < n; ++x) {
                int gx = gm[x];
                fg[x] = (partial && gx == n) ? n : fm[gx];
            }
            table[static_cast<std::size_t>(f) * count + g] = encode_transformation(fg, n, partial);
        }
    }
    m.set_table("mul", table);
    return m;
}

std::vector<FiniteMap> automorphisms_brute_force(const FiniteAlgebra& a) {
    std::vector<FiniteMap> out;
    FiniteMap s(a.carrier());
    std::iota(s.begin(), s.end(), 0);
    do {
        if (is_homomorphism(a, a, s)) out.push_back(s);
    } while (std::next_permutation(s.begin(), s.end()));
    return out;
}

namespace {

// Generator-image search: express every monoid element as a word in a small
// generating set, then determine candidate automorphisms by their generator
// images.
std::vector<FiniteMap> automorphisms_by_generators(const FiniteAlgebra& m,
                                                   const std::vector<int>& gens) {
    int count = m.carrier();
    auto mul = [&](int f, int g) { return m.apply("mul", {f, g}); };

    // BFS words over the generators; element -> word (generator index list)
    std::vector<std::vector<int>> word(count);
    std::vector<bool> reached(count, false);
    std::vector<int> frontier;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!reached[gens[i]]) {
            reached[gens[i]] = true;
            word[gens[i]] = {static_cast<int>(i)};
            frontier.push_back(gens[i]);
        }
    }
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int e : frontier) {
            for (std::size_t i = 0; i < gens.size(); ++i) {
                int p = mul(e, gens[i]);
                if (!reached[p]) {
                    reached[p] = true;
                    word[p] = word[e];
                    word[p].push_back(static_cast<int>(i));
                    next.push_back(p);
                }
            }
        }
        frontier = std::move(next);
    }
    int unreached = 0;
    for (int e = 0; e < count; ++e)
        if (!reached[e]) ++unreached;
    if (unreached > 1)
        throw error("generating set does not generate the monoid");
    // at most the identity may be missing; pick it up via g * g^-1 below
    int identity = -1;
    for (int e = 0; e < count; ++e) {
        bool is_id = true;
        for (int f = 0; f < count && is_id; ++f)
            if (mul(e, f) != f || mul(f, e) != f) is_id = false;
        if (is_id) identity = e;
    }

    auto eval_word = [&](const std::vector<int>& w, const std::vector<int>& images) {
        int acc = images[w[0]];
        for (std::size_t i = 1; i < w.size(); ++i) acc = mul(acc, images[w[i]]);
        return acc;
    };

    std::vector<FiniteMap> out;
    std::vector<int> images(gens.size(), 0);
    std::function<void(std::size_t)> assign = [&](std::size_t gi) {
        if (gi == gens.size()) {
            FiniteMap phi(count, -1);
            for (int e = 0; e < count; ++e) {
                if (!reached[e]) {
                    phi[e] = e;  // identity element is fixed by any automorphism
                    continue;
                }
                phi[e] = eval_word(word[e], images);
            }
            if (identity >= 0 && phi[identity] != identity) return;
            if (is_isomorphism(m, m, phi)) out.push_back(phi);
            return;
        }
        for (int img = 0; img < count; ++img) {
            // cheap relation-based pruning before recursing
            int g = gens[gi];
            if (mul(g, g) == g && mul(img, img) != img) continue;
            if (identity >= 0 && mul(g, g) == identity && mul(img, img) != identity) continue;
            images[gi] = img;
            assign(gi + 1);
        }
    };
    assign(0);

    // distinct automorphisms only
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

InnerAutomorphismReport check_automorphisms_inner(const FiniteAlgebra& m, int n, bool partial) {
    int count = m.carrier();
    std::vector<FiniteMap> autos;
    if (count <= 9) {
        autos = automorphisms_brute_force(m);
    } else {
        // T_3 and larger: generator-image search
        std::vector<int> cycle(n), transposition(n), idem(n);
        for (int x = 0; x < n; ++x) {
            cycle[x] = (x + 1) % n;
            transposition[x] = x;
            idem[x] = x;
        }
        std::swap(transposition[0], transposition[1]);
        idem[1] = 0;  // rank n-1 idempotent merging 1 into 0
        std::vector<int> gens = {encode_transformation(cycle, n, partial),
                                 encode_transformation(transposition, n, partial),
                                 encode_transformation(idem, n, partial)};
        autos = automorphisms_by_generators(m, gens);
    }

    // all conjugations by base-set permutations
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::vector<std::pair<std::vector<int>, FiniteMap>> conjugations;
    do {
        std::vector<int> sigma_inv(n);
        for (int x = 0; x < n; ++x) sigma_inv[sigma[x]] = x;
        FiniteMap conj(count);
        for (int e = 0; e < count; ++e) {
            std::vector<int> f = decode_transformation(e, n, partial);
            std::vector<int> g(n);
            for (int x = 0; x < n; ++x) {
                int pre = f[sigma_inv[x]];
                g[x] = (partial && pre == n) ? n : sigma[pre];
            }
            conj[e] = encode_transformation(g, n, partial);
        }
        conjugations.emplace_back(sigma, conj);
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    InnerAutomorphismReport report;
    report.all_inner = true;
    for (const auto& phi : autos) {
        std::optional<std::vector<int>> witness;
        for (const auto& [perm, conj] : conjugations) {
            if (conj == phi) {
                witness = perm;
                break;
            }
        }
        if (!witness) report.all_inner = false;
        report.automorphisms.emplace_back(phi, witness);
    }
    return report;
}

std::vector<FiniteAlgebra> all_semilattices(int carrier) {
    std::vector<FiniteAlgebra> out;
    Signature sig({{"mul", 2}});
    std::vector<int> table(static_cast<std::size_t>(carrier) * carrier, 0);
    std::function<void(std::size_t)> fill = [&](std::size_t pos) {
        if (pos == table.size()) {
            auto at = [&](int i, int j) { return table[static_cast<std::size_t>(i) * carrier + j]; };
            for (int i = 0; i < carrier; ++i) {
                if (at(i, i) != i) return;
                for (int j = 0; j < carrier; ++j) {
                    if (at(i, j) != at(j, i)) return;
                    for (int k = 0; k < carrier; ++k)
                        if (at(at(i, j), k) != at(i, at(j, k))) return;
                }
            }
            FiniteAlgebra a(carrier, sig);
            a.set_table("mul", table);
            out.push_back(std::move(a));
            return;
        }
        // diagonal entries are forced by idempotence
        int i = static_cast<int>(pos) / carrier;
        int j = static_cast<int>(pos) % carrier;
        if (i == j) {
            table[pos] = i;
            fill(pos + 1);
            return;
        }
        for (int v = 0; v < carrier; ++v) {
            table[pos] = v;
            fill(pos + 1);
        }
    };
    fill(0);
    return out;
}

}  // namespace uacat
