#ifndef UFI_CLI_HPP
#define UFI_CLI_HPP

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ufi_all.hpp"
#include "io.hpp"

namespace ufi::cli {

enum ExitCode { ok = 0, mismatch = 1, parse_error = 2, guard_error = 3, precondition_error = 4 };

struct Options {
    std::string input;
    std::string second;
    bool json = false;
    bool allow_empty = false;
    bool oracle = false;
    bool tag_faces = false;
    bool dot = false;
    bool resolution = false;
    bool quotient = false;
    bool suppress_zero_rows = false;
    int powers = 1;
    Limits limits;
};

/// Output of one command: text or JSON plus an exit status.
struct Report {
    std::ostringstream text;
    Json json = Json::object();
    int status = ok;
};

namespace detail {

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string complex_name(const SimplicialComplex& c) {
    if (c.is_void()) {
        return "void";
    }
    std::string out = "<";
    for (std::size_t i = 0; i < c.facets().size(); ++i) {
        out += (i ? ", " : "") + c.face_name(c.facets()[i]);
    }
    return out + ">";
}

inline Json colouring_tokens(const SimplicialComplex& c, const Colouring& col) {
    Json classes = Json::array();
    for (const auto& cls : col.classes) {
        Json t = Json::array();
        for (int v : cls) {
            t.push_back(c.labels()[static_cast<std::size_t>(v)]);
        }
        classes.push_back(t);
    }
    return classes;
}

inline Json betti_json(const BettiTable& t) {
    Json rows = Json::array();
    for (const auto& [k, v] : t.entries) {
        rows.push_back({k.first, k.second, v});
    }
    return rows;
}

inline Json polynomial_json(const Polynomial& p) { return p.coeff; }

inline std::vector<std::string> prime_strings(const PrimeSet& ps, const std::vector<std::string>& vars) {
    std::vector<std::string> out;
    for (const auto& p : ps) {
        out.push_back(prime_name(p, vars));
    }
    return out;
}

/// Two vertices of one class lying in a common face.
inline std::string improper_witness(const SimplicialComplex& c, const Colouring& col) {
    for (const auto& cls : col.classes) {
        for (std::size_t a = 0; a < cls.size(); ++a) {
            for (std::size_t b = a + 1; b < cls.size(); ++b) {
                if (c.contains(bit(cls[a]) | bit(cls[b]))) {
                    return c.face_name(bit(cls[a]) | bit(cls[b])) + " is a face inside one class";
                }
            }
        }
    }
    return "";
}

inline void require_complex(const Instance& in, const std::string& command) {
    if (in.kind == InputKind::ideal) {
        fail_precondition("'" + command + "' needs a complex or poset input, not an ideal");
    }
}

inline MonomialIdeal instance_ideal(const Instance& in, const Limits& limits) {
    return in.kind == InputKind::ideal ? in.ideal : uniform_face_ideal(in.complex, in.colouring, limits);
}

inline void check_line(Report& r, const std::string& name, bool pass, Json& checks) {
    r.text << (pass ? "PASS " : "FAIL ") << name << "\n";
    checks.push_back({{"check", name}, {"pass", pass}});
    if (!pass) {
        r.status = mismatch;
    }
}

} // namespace detail

inline void cmd_check(const Instance& in, Report& r) {
    detail::require_complex(in, "check");
    const auto& c = in.complex;
    const auto& col = in.colouring;
    r.text << "complex: " << detail::complex_name(c) << "\n";
    r.text << "colouring: " << colouring_name(c, col) << "\n";
    r.json["complex"] = detail::complex_name(c);
    r.json["colouring"] = detail::colouring_tokens(c, col);
    bool proper = is_proper(c, col);
    r.json["proper"] = proper;
    if (!proper) {
        std::string w = detail::improper_witness(c, col);
        r.text << "not proper: " << w << "\n";
        r.json["witness"] = w;
        return;
    }
    NestedCheck chk = check_nested(c, col);
    r.json["nested"] = chk.nested;
    r.json["in_nesting_order"] = chk.in_nesting_order;
    if (!chk.nested) {
        std::string w = link_witness(c, *chk.witness);
        r.text << "not nested: " << w << "\n";
        r.json["witness"] = w;
        return;
    }
    if (!chk.in_nesting_order) {
        std::string w = link_witness(c, *chk.witness);
        r.text << "nested, but classes are not in nesting order: " << w << "\n";
        r.text << "nesting order: " << colouring_name(c, chk.ordered) << "\n";
        r.json["witness"] = w;
        r.json["nesting_order"] = detail::colouring_tokens(c, chk.ordered);
        return;
    }
    r.text << "nested (classes listed in nesting order)\n";
    r.json["nesting_order"] = detail::colouring_tokens(c, chk.ordered);
}

inline void cmd_chromatic(const Instance& in, const Options& o, Report& r) {
    detail::require_complex(in, "chromatic");
    const auto& c = in.complex;
    int chi = chromatic_number(c, o.limits);
    ChainCover cn = nested_chromatic_number(c);
    ChainCover gn = graph_nested_chromatic_number(underlying_graph(c));
    NestedCheck wc = check_nested(c, cn.witness);
    r.text << "chromatic number: " << chi << "\n";
    r.text << "nested chromatic number: " << cn.count << "\n";
    r.text << "witness: " << colouring_name(c, cn.witness) << " (nested: " << detail::yes_no(wc.in_nesting_order)
           << ")\n";
    r.text << "nested chromatic number of the 1-skeleton graph: " << gn.count << "\n";
    r.json["chromatic_number"] = chi;
    r.json["nested_chromatic_number"] = cn.count;
    r.json["witness"] = detail::colouring_tokens(c, cn.witness);
    r.json["witness_nested"] = wc.in_nesting_order;
    r.json["graph_nested_chromatic_number"] = gn.count;
}

inline void cmd_ideal(const Instance& in, const Options& o, Report& r) {
    MonomialIdeal I = detail::instance_ideal(in, o.limits);
    r.json = ideal_json(I);
    if (o.tag_faces && in.kind != InputKind::ideal) {
        auto tagged = tagged_generators(in.complex, in.colouring, o.limits);
        std::sort(tagged.begin(), tagged.end(),
                  [](const TaggedGenerator& a, const TaggedGenerator& b) { return monomial_less(a.monomial, b.monomial); });
        Json faces = Json::array();
        for (const auto& t : tagged) {
            std::string f = in.complex.face_name(t.face);
            r.text << to_string(t.monomial, I.variables()) << "\t" << f << "\n";
            faces.push_back({{"face", f}, {"generator", to_string(t.monomial, I.variables())}});
        }
        r.json["tagged"] = faces;
        return;
    }
    for (const auto& g : I.generator_strings()) {
        r.text << g << "\n";
    }
}

inline void cmd_poset(const Instance& in, const Options& o, Report& r) {
    detail::require_complex(in, "poset");
    const auto& c = in.complex;
    const auto& col = in.colouring;
    IndexVectorPoset p = index_vector_poset(c, col, o.limits);
    std::map<IndexVector, VertexSet> face_of;
    for (VertexSet f : c.faces()) {
        face_of[index_vector(f, col)] = f;
    }
    if (o.dot) {
        r.text << "digraph P {\n  rankdir=BT;\n";
        for (std::size_t i = 0; i < p.size(); ++i) {
            r.text << "  n" << i << " [label=\"" << vector_name(p[i]) << "\\n" << c.face_name(face_of[p[i]]) << "\"];\n";
        }
        for (const auto& cv : p.covers()) {
            r.text << "  n" << cv.lower << " -> n" << cv.upper << ";\n";
        }
        r.text << "}\n";
    }
    bool order_ideal = is_order_ideal(p);
    bool meet = is_meet_semilattice(p);
    bool distributive = meet && is_meet_distributive(p);
    NonfacePoset nf = minimal_nonface_poset(c, col);
    auto minima = minimal_elements(nf);
    FirstBettiBound fb = first_betti_lower_bound(c, col, o.limits);
    if (!o.dot) {
        r.text << "index vectors (" << p.size() << "):\n";
        for (std::size_t i = 0; i < p.size(); ++i) {
            r.text << "  " << vector_name(p[i]) << "  " << c.face_name(face_of[p[i]]) << "\n";
        }
        r.text << "covering relations: " << p.covers().size() << "\n";
        r.text << "order ideal: " << detail::yes_no(order_ideal) << "\n";
        r.text << "meet-semilattice: " << detail::yes_no(meet) << "\n";
        r.text << "meet-distributive: " << detail::yes_no(distributive) << "\n";
        r.text << "minimal non-face vectors:";
        for (std::size_t i = 0; i < nf.elements.size(); ++i) {
            r.text << " " << c.face_name(nf.nonfaces[i]) << "=" << vector_name(nf.elements[i]);
        }
        r.text << "\nminimal elements:";
        for (const auto& e : minima) {
            r.text << " " << vector_name(e);
        }
        r.text << "\nfirst syzygies from covers: " << fb.cover_total << " (coarse bound " << fb.coarse << ")\n";
    }
    r.json = poset_json(p, class_sizes(col));
    r.json["order_ideal"] = order_ideal;
    r.json["meet_semilattice"] = meet;
    r.json["meet_distributive"] = distributive;
    Json mins = Json::array();
    for (const auto& e : minima) {
        mins.push_back(e);
    }
    r.json["nonface_minima"] = mins;
    r.json["cover_syzygies"] = fb.cover_total;
    r.json["coarse_first_betti_bound"] = fb.coarse;
}

inline void cmd_cubical(const Instance& in, const Options& o, Report& r) {
    detail::require_complex(in, "cubical");
    LabeledCellComplex l = labeled_complex(in.complex, in.colouring, o.limits);
    const auto& cx = l.cubes;
    if (o.dot) {
        r.text << "graph C {\n";
        for (std::size_t i = 0; i < cx.size(); ++i) {
            if (cx[i].dim() == 0) {
                r.text << "  n" << i << " [label=\"" << vector_name(cx[i].lower) << "\"];\n";
            }
        }
        for (std::size_t i = 0; i < cx.size(); ++i) {
            if (cx[i].dim() == 1) {
                int a = cx.find({cx[i].lower, 0});
                int b = cx.find({cx[i].upper(), 0});
                r.text << "  n" << a << " -- n" << b << ";\n";
            }
        }
        r.text << "}\n";
        return;
    }
    auto f = cx.f_vector();
    auto seq = collapse_sequence(cx);
    CollapseCheck cc = validate_collapses(cx, seq);
    CellularFreeComplex fc = cellular_free_complex(l);
    bool d2 = differential_squares_to_zero(fc);
    bool minimal = is_minimal(fc, l);
    r.text << "f-vector:";
    for (auto x : f) {
        r.text << " " << x;
    }
    r.text << "\ncollapses: " << seq.size() << " (" << (cc.valid ? "valid, collapses to a point" : cc.failure)
           << ")\n";
    r.text << "differential squares to zero: " << detail::yes_no(d2) << "\n";
    r.text << "labels strictly increase (minimal): " << detail::yes_no(minimal) << "\n";
    r.json["f_vector"] = f;
    r.json["collapses"] = seq.size();
    r.json["collapsible"] = cc.valid;
    r.json["d_squared_zero"] = d2;
    r.json["minimal"] = minimal;
    if (o.resolution) {
        MonomialIdeal I = uniform_face_ideal(in.complex, in.colouring, o.limits);
        ResolutionReport rep = verify_resolution(l, I, o.limits);
        r.text << "distinct labels: " << rep.distinct_labels << "\n";
        r.text << "lcm lattice: " << rep.lattice_size << " degrees, " << rep.acyclic_degrees << " acyclic\n";
        r.text << "multigraded Betti numbers match the oracle: " << detail::yes_no(rep.betti_match) << "\n";
        for (const auto& fl : rep.failures) {
            r.text << "  " << fl << "\n";
        }
        r.json["distinct_labels"] = rep.distinct_labels;
        r.json["lattice_size"] = rep.lattice_size;
        r.json["acyclic_degrees"] = rep.acyclic_degrees;
        r.json["betti_match"] = rep.betti_match;
        if (!rep.ok() || !cc.valid || !d2 || !minimal) {
            r.status = mismatch;
        }
    }
}

inline void cmd_betti(const Instance& in, const Options& o, Report& r) {
    auto render = [&](const BettiTable& t) {
        return render_betti(o.quotient ? t.quotient_of_ideal() : t, o.suppress_zero_rows);
    };
    r.json["module"] = o.quotient ? "quotient" : "ideal";
    if (!o.oracle) {
        detail::require_complex(in, "betti");
        BettiTable t = betti_closed_form(in.complex, in.colouring, o.limits);
        r.text << render(t);
        r.json["betti"] = detail::betti_json(o.quotient ? t.quotient_of_ideal() : t);
        return;
    }
    MonomialIdeal I = detail::instance_ideal(in, o.limits);
    BettiTable oracle = betti_oracle(I, o.limits).graded();
    r.text << render(oracle);
    r.json["betti"] = detail::betti_json(o.quotient ? oracle.quotient_of_ideal() : oracle);
    if (in.kind != InputKind::ideal && check_nested(in.complex, in.colouring).in_nesting_order) {
        bool agree = betti_closed_form(in.complex, in.colouring, o.limits) == oracle;
        r.text << "closed form agrees with oracle: " << detail::yes_no(agree) << "\n";
        r.json["closed_form_agrees"] = agree;
        if (!agree) {
            r.status = mismatch;
        }
    }
}

inline void cmd_bs(const Instance& in, const Options& o, Report& r) {
    detail::require_complex(in, "bs");
    const auto& c = in.complex;
    BettiTable table = betti_closed_form(c, in.colouring, o.limits);
    if (o.quotient) {
        table = table.quotient_of_ideal();
    }
    BSDecomposition d = o.quotient ? bsd_quotient(c, in.colouring, o.limits) : bsd_ideal(c, in.colouring, o.limits);
    Json terms = Json::array();
    for (const auto& t : d.terms) {
        r.text << rational_str(t.coefficient) << " * " << t.diagram.str() << "\n";
        terms.push_back({{"coefficient", rational_str(t.coefficient)}, {"degrees", t.diagram.degrees}});
    }
    bool matches = d.matches(table);
    r.text << "reconstruction equals the Betti table: " << detail::yes_no(matches) << "\n";
    r.json["module"] = o.quotient ? "quotient" : "ideal";
    r.json["terms"] = terms;
    r.json["reconstruction_matches"] = matches;
    if (!matches) {
        r.status = mismatch;
    }
    if (o.oracle) {
        BettiTable ot = betti_oracle(uniform_face_ideal(c, in.colouring, o.limits), o.limits).graded();
        if (o.quotient) {
            ot = ot.quotient_of_ideal();
        }
        BSDecomposition g = bsd_generic(ot);
        bool agree = g.coefficients() == d.coefficients();
        for (std::size_t i = 0; agree && i < g.terms.size(); ++i) {
            agree = g.terms[i].diagram.degrees == d.terms[i].diagram.degrees;
        }
        r.text << "greedy decomposition of the oracle table agrees: " << detail::yes_no(agree) << "\n";
        r.json["oracle_agrees"] = agree;
        if (!agree) {
            r.status = mismatch;
        }
    }
}

inline void cmd_invariants(const Instance& in, const Options& o, Report& r) {
    detail::require_complex(in, "invariants");
    HilbertSummary h = hilbert_summary(in.complex, in.colouring, o.limits);
    BettiTable t = betti_closed_form(in.complex, in.colouring, o.limits);
    if (h.zero_quotient) {
        r.text << "R/I = 0 (the ideal is the whole ring)\n";
    } else {
        r.text << "Q(t) = " << h.q.str() << "\n";
        r.text << "Krull dimension: " << h.krull_dim << "\n";
        r.text << "codimension: " << h.codim << "\n";
        r.text << "multiplicity: " << h.multiplicity << "\n";
        r.text << "projective dimension of R/I: " << h.pdim << "\n";
        r.text << "depth of R/I: " << h.depth << "\n";
        r.text << "regularity of I: " << h.reg_ideal << "\n";
        r.text << "regularity of R/I: " << h.reg_quotient << "\n";
        r.text << "Cohen-Macaulay: " << detail::yes_no(h.cohen_macaulay) << "\n";
    }
    r.text << "Betti table of I:\n" << render_betti(t, o.suppress_zero_rows);
    r.json["zero_quotient"] = h.zero_quotient;
    r.json["q_polynomial"] = detail::polynomial_json(h.q);
    r.json["krull_dim"] = h.krull_dim;
    r.json["codim"] = h.codim;
    r.json["multiplicity"] = h.multiplicity;
    r.json["pdim"] = h.pdim;
    r.json["depth"] = h.depth;
    r.json["reg_ideal"] = h.reg_ideal;
    r.json["reg_quotient"] = h.reg_quotient;
    r.json["cohen_macaulay"] = h.cohen_macaulay;
    r.json["betti"] = detail::betti_json(t);
    if (o.oracle && !h.zero_quotient) {
        MonomialIdeal I = uniform_face_ideal(in.complex, in.colouring, o.limits);
        Polynomial num = hilbert_numerator(I, o.limits);
        int codim = 0;
        while (num.degree() >= 0 && num.value_at_one() == 0) {
            num = num.divide_one_minus_t();
            ++codim;
        }
        BettiTable ot = betti_oracle(I, o.limits).graded();
        bool agree = num == h.q && codim == h.codim && num.value_at_one() == h.multiplicity &&
                     ot.length() + 1 == h.pdim && ot.regularity() == h.reg_ideal;
        r.text << "oracle agrees: " << detail::yes_no(agree) << "\n";
        r.json["oracle_agrees"] = agree;
        if (!agree) {
            r.status = mismatch;
        }
    }
}

inline void cmd_primes(const Instance& in, const Options& o, Report& r) {
    if (in.kind == InputKind::ideal) {
        PrimeSet ps = associated_primes_generic(in.ideal, o.limits);
        r.text << "associated primes: " << prime_set_str(ps, in.ideal.variables()) << "\n";
        r.json["associated_primes"] = detail::prime_strings(ps, in.ideal.variables());
        return;
    }
    const auto& c = in.complex;
    const auto& col = in.colouring;
    auto vars = paired_variables(col.size());
    UfiDecomposition d = ufi_irreducible_decomposition(c, col, o.limits);
    r.text << "irreducible components:\n";
    Json comps = Json::array();
    for (const auto& comp : d.components()) {
        r.text << "  " << comp.str(vars) << "\n";
        comps.push_back(comp.str(vars));
    }
    r.json["components"] = comps;
    auto steps = persistence_report(c, col, o.powers, o.limits);
    Json powers = Json::array();
    bool persistent = true;
    for (const auto& s : steps) {
        r.text << "Ass(R/I^" << s.power << "): " << prime_set_str(s.primes, vars) << "\n";
        if (s.power > 1) {
            r.text << "  contains Ass(R/I^" << s.power - 1 << "): " << detail::yes_no(s.contains_previous) << "\n";
        }
        persistent = persistent && s.contains_previous;
        powers.push_back({{"power", s.power},
                          {"primes", detail::prime_strings(s.primes, vars)},
                          {"contains_previous", s.contains_previous}});
    }
    bool unmixed = is_unmixed(steps.front().primes);
    r.text << "unmixed (minimal primes of equal height): " << detail::yes_no(unmixed) << "\n";
    r.json["powers"] = powers;
    r.json["unmixed"] = unmixed;
    if (!persistent) {
        r.status = mismatch;
    }
    if (o.oracle) {
        MonomialIdeal I = uniform_face_ideal(c, col, o.limits);
        bool agree = irredundant(d.components()) == irreducible_decomposition_generic(I, o.limits);
        r.text << "generic decomposition agrees: " << detail::yes_no(agree) << "\n";
        r.json["oracle_agrees"] = agree;
        if (!agree) {
            r.status = mismatch;
        }
    }
}

inline void cmd_product(const Instance& in, const Options& o, Report& r) {
    detail::require_complex(in, "product");
    Instance second = load_instance(o.second, o.allow_empty);
    detail::require_complex(second, "product");
    UfiPair p = product_as_ufi(in.complex, in.colouring, second.complex, second.colouring, o.limits);
    NestedCheck chk = check_nested(p.complex, p.colouring);
    Limits relaxed = o.limits;
    relaxed.max_vertices = max_ground;
    relaxed.max_faces = std::max<std::size_t>(o.limits.max_faces, p.complex.faces().size());
    MonomialIdeal I = uniform_face_ideal(p.complex, p.colouring, relaxed);
    r.text << "complex: " << detail::complex_name(p.complex) << "\n";
    r.text << "colouring: " << colouring_name(p.complex, p.colouring) << "\n";
    r.text << "nested (in nesting order): " << detail::yes_no(chk.in_nesting_order) << "\n";
    r.text << "generators: " << I.size() << " (equal to the product of the two ideals)\n";
    r.json = complex_json(p.complex, p.colouring);
    r.json["nested"] = chk.in_nesting_order;
    r.json["generators"] = I.generator_strings();
}

/// Every closed form against its oracle; nonzero status on any mismatch.
inline void cmd_verify(const Instance& in, const Options& o, Report& r) {
    Json checks = Json::array();
    if (in.kind == InputKind::ideal) {
        BettiTable ot = betti_oracle(in.ideal, o.limits).graded();
        detail::check_line(r, "oracle Betti table computed", !ot.empty(), checks);
        r.json["checks"] = checks;
        return;
    }
    const auto& c = in.complex;
    const auto& col = in.colouring;
    MonomialIdeal I = uniform_face_ideal(c, col, o.limits);
    NestedCheck chk = check_nested(c, col);
    BettiTable ot = betti_oracle(I, o.limits).graded();
    bool linear = std::all_of(ot.entries.begin(), ot.entries.end(), [&](const auto& e) {
        return e.first.first != 1 || e.first.second == c.ground_size() + 1;
    });
    detail::check_line(r, "linear first syzygies iff nested", linear == chk.in_nesting_order, checks);
    FirstBettiBound fb = first_betti_lower_bound(c, col, o.limits);
    detail::check_line(r, "first Betti number at least the cover count", ot.total(1) >= fb.cover_total, checks);
    bool qb = is_q_borel(I, q_k_poset(col.size()));
    detail::check_line(r, "Q_k-Borel iff nested", qb == chk.in_nesting_order, checks);
    if (!chk.in_nesting_order) {
        r.text << "colouring is not in nesting order; closed forms skipped\n";
        r.json["checks"] = checks;
        return;
    }
    BettiTable cf = betti_closed_form(c, col, o.limits);
    detail::check_line(r, "Betti table closed form = oracle", cf == ot, checks);
    detail::check_line(r, "Boij-Soderberg (ideal) reconstructs", bsd_ideal(c, col, o.limits).matches(cf), checks);
    auto gi = bsd_generic(ot);
    detail::check_line(r, "Boij-Soderberg (ideal) = greedy peel",
                       gi.coefficients() == bsd_ideal(c, col, o.limits).coefficients(), checks);
    HilbertSummary h = hilbert_summary(c, col, o.limits);
    if (!h.zero_quotient) {
        BettiTable q = cf.quotient_of_ideal();
        auto bq = bsd_quotient(c, col, o.limits);
        detail::check_line(r, "Boij-Soderberg (quotient) reconstructs", bq.matches(q), checks);
        detail::check_line(r, "Boij-Soderberg (quotient) = greedy peel",
                           bsd_generic(ot.quotient_of_ideal()).coefficients() == bq.coefficients(), checks);
        Polynomial num = hilbert_numerator(I, o.limits);
        int codim = 0;
        while (num.degree() >= 0 && num.value_at_one() == 0) {
            num = num.divide_one_minus_t();
            ++codim;
        }
        detail::check_line(r, "Q-polynomial = Hilbert numerator / (1-t)^codim", num == h.q && codim == h.codim, checks);
        detail::check_line(r, "multiplicity = Q(1)", num.value_at_one() == h.multiplicity, checks);
        detail::check_line(r, "pdim = oracle", ot.length() + 1 == h.pdim, checks);
        detail::check_line(r, "Auslander-Buchsbaum", h.pdim + h.depth == h.variables, checks);
    }
    detail::check_line(r, "regularity of I = oracle", ot.regularity() == h.reg_ideal, checks);
    if (!h.zero_quotient) {
        UfiDecomposition d = ufi_irreducible_decomposition(c, col, o.limits);
        detail::check_line(r, "irreducible decomposition = generic",
                           irredundant(d.components()) == irreducible_decomposition_generic(I, o.limits), checks);
        detail::check_line(r, "associated primes = generic",
                           ufi_associated_primes(c, col, o.limits) == associated_primes_generic(I, o.limits), checks);
    }
    if (c.dimension() >= 0) {
        LabeledCellComplex l = labeled_complex(c, col, o.limits);
        CollapseCheck cc = validate_collapses(l.cubes, collapse_sequence(l.cubes));
        detail::check_line(r, "cubical complex collapses to a point", cc.valid, checks);
        CellularFreeComplex fc = cellular_free_complex(l);
        detail::check_line(r, "cellular differential squares to zero", differential_squares_to_zero(fc), checks);
        detail::check_line(r, "cellular resolution is minimal", is_minimal(fc, l), checks);
        detail::check_line(r, "cellular resolution = oracle", verify_resolution(l, I, o.limits).ok(), checks);
    }
    r.json["checks"] = checks;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Uniform face ideals of coloured simplicial complexes"};
    app.name("ufi");
    app.require_subcommand(1, 1);
    Options o;
    app.add_flag("--json", o.json, "machine-readable output");
    app.add_flag("--allow-empty-classes", o.allow_empty, "permit empty colour classes");
    app.add_option("--max-vertices", o.limits.max_vertices, "vertex guard");
    app.add_option("--max-faces", o.limits.max_faces, "face guard");
    app.add_option("--max-generators", o.limits.max_generators, "generator guard for homology oracles");
    app.add_option("--max-power", o.limits.max_power, "power guard");
    app.fallthrough();

    auto input = [&](CLI::App* s) { s->add_option("input", o.input, "JSON file or inline JSON")->required(); };
    auto oracle = [&](CLI::App* s) { s->add_flag("--oracle", o.oracle, "also run the brute-force oracle and compare"); };

    std::string command;
    auto sub = [&](const char* name, const char* help) {
        CLI::App* s = app.add_subcommand(name, help);
        s->callback([&command, name] { command = name; });
        input(s);
        return s;
    };
    sub("check", "properness and nestedness with witnesses");
    sub("chromatic", "chromatic and nested chromatic numbers");
    sub("ideal", "generators of the uniform face ideal")->add_flag("--tag-faces", o.tag_faces, "show each face");
    CLI::App* poset = sub("poset", "index-vector poset");
    poset->add_flag("--dot", o.dot, "Graphviz output");
    CLI::App* cubical = sub("cubical", "cubical complex and cellular resolution");
    cubical->add_flag("--dot", o.dot, "Graphviz output");
    cubical->add_flag("--resolution", o.resolution, "check the cellular resolution against the oracle");
    CLI::App* betti = sub("betti", "graded Betti table");
    oracle(betti);
    betti->add_flag("--quotient", o.quotient, "table of R/I");
    betti->add_flag("--suppress-zero-rows", o.suppress_zero_rows, "omit rows of zeros");
    CLI::App* bs = sub("bs", "Boij-Soderberg decomposition");
    bs->add_flag("--quotient", o.quotient, "decompose the table of R/I");
    oracle(bs);
    CLI::App* inv = sub("invariants", "Hilbert series and homological invariants");
    oracle(inv);
    inv->add_flag("--suppress-zero-rows", o.suppress_zero_rows, "omit rows of zeros");
    CLI::App* primes = sub("primes", "irreducible decomposition and associated primes");
    primes->add_option("--powers", o.powers, "largest power to report")->check(CLI::PositiveNumber);
    oracle(primes);
    sub("product", "product of two uniform face ideals")->add_option("second", o.second, "second input")->required();
    sub("verify", "cross-check every closed form against its oracle");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return parse_error;
    }

    Report r;
    try {
        Instance in = load_instance(o.input, o.allow_empty);
        const std::map<std::string, std::function<void()>> commands{
            {"check", [&] { cmd_check(in, r); }},
            {"chromatic", [&] { cmd_chromatic(in, o, r); }},
            {"ideal", [&] { cmd_ideal(in, o, r); }},
            {"poset", [&] { cmd_poset(in, o, r); }},
            {"cubical", [&] { cmd_cubical(in, o, r); }},
            {"betti", [&] { cmd_betti(in, o, r); }},
            {"bs", [&] { cmd_bs(in, o, r); }},
            {"invariants", [&] { cmd_invariants(in, o, r); }},
            {"primes", [&] { cmd_primes(in, o, r); }},
            {"product", [&] { cmd_product(in, o, r); }},
            {"verify", [&] { cmd_verify(in, o, r); }},
        };
        commands.at(command)();
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        if (!e.witness().empty()) {
            err << "witness: " << e.witness() << "\n";
        }
        switch (e.kind()) {
        case ErrorKind::parse:
            return parse_error;
        case ErrorKind::guard:
            return guard_error;
        case ErrorKind::precondition:
            return precondition_error;
        }
    }
    if (o.json) {
        out << r.json.dump(2) << "\n";
    } else {
        out << r.text.str();
    }
    return r.status;
}

} // namespace ufi::cli

#endif
