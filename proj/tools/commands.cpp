#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "format.hpp"
#include "hgl/galois.hpp"

namespace hgl::cli {

namespace {

/// Thrown for invalid flag combinations; maps to exit code 2.
class UsageError : public Error {
public:
    using Error::Error;
};

struct Options {
    std::string file;
    std::string ideal;
    std::string subalgebra;
    std::string cleft;
    std::string gamma;
    std::string output;
    std::string field = "GF(3)";
    std::string kind = "hopf";
    std::size_t order = 2;
    std::string root;
    bool regular = false;
    bool mirror = false;
    bool dot = false;
    bool enumerate = false;
    std::size_t cap = 6;
    unsigned jobs = 1;

    EnumerationOptions enumeration() const { return {cap, jobs}; }
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string hex(std::uint64_t h)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string coords(const Matrix& row)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t j = 0; j < row.cols(); ++j) os << (j ? "," : "") << row.at(0, j);
    os << ')';
    return os.str();
}

/// "2 x + gx" style expression of a row vector in the given basis.
std::string expression(const Matrix& row, const std::vector<std::string>& labels)
{
    std::string out;
    for (std::size_t j = 0; j < row.cols(); ++j) {
        if (row.is_zero_at(0, j)) continue;
        const Scalar c = row.at(0, j);
        if (!out.empty()) out += " + ";
        if (!c.is_one()) out += c.to_string() + " ";
        out += j < labels.size() ? labels[j] : "e" + std::to_string(j);
    }
    return out.empty() ? "0" : out;
}

void print_basis(std::ostream& out, const Subspace& s, const std::vector<std::string>& labels)
{
    for (std::size_t i = 0; i < s.dim(); ++i) {
        const Matrix row = s.basis().row(i);
        out << "  " << coords(row);
        if (!labels.empty()) out << "  " << expression(row, labels);
        out << '\n';
    }
}

HopfAlgebra apply_mirror(HopfAlgebra h, const Options& o) { return o.mirror ? coopposite(h) : h; }

HopfAlgebra load_hopf(const Options& o)
{
    Document d = parse_file(o.file);
    if (auto* h = std::get_if<HopfAlgebra>(&d)) return apply_mirror(std::move(*h), o);
    if (auto* a = std::get_if<ComoduleAlgebra>(&d)) {
        if (o.mirror) throw UsageError("--mirror applies to Hopf algebra files only");
        return a->hopf();
    }
    throw UsageError(o.file + ": expected a hopf or comodule document");
}

/// The comodule algebra named by the input file and --regular / --cleft.
ComoduleAlgebra load_comodule(const Options& o)
{
    Document d = parse_file(o.file);
    if (auto* a = std::get_if<ComoduleAlgebra>(&d)) {
        if (o.mirror) throw UsageError("--mirror applies to Hopf algebra files only");
        if (o.regular || !o.cleft.empty()) throw UsageError("--regular and --cleft need a Hopf algebra file");
        return std::move(*a);
    }
    auto* h = std::get_if<HopfAlgebra>(&d);
    if (!h) throw UsageError(o.file + ": expected a hopf or comodule document");
    const HopfAlgebra hopf = apply_mirror(std::move(*h), o);
    if (o.regular && !o.cleft.empty()) throw UsageError("--regular and --cleft are exclusive");
    if (o.regular) return regular(hopf);
    if (!o.cleft.empty()) return trivial_cleft(parse_algebra(o.cleft), hopf).algebra;
    throw UsageError("a Hopf algebra file needs --regular or --cleft <algebra file> here");
}

Subspace load_subspace(const std::string& path, std::size_t ambient, const char* what)
{
    Subspace s = parse_subspace(path);
    if (s.ambient_dim() != ambient)
        throw UsageError(path + ": " + what + " has ambient dimension " + std::to_string(s.ambient_dim()) +
                         ", expected " + std::to_string(ambient));
    return s;
}

GeneralisedQuotient load_quotient(const Options& o, const HopfAlgebra& h)
{
    if (o.ideal.empty()) return full_quotient(h);
    const Subspace ideal = load_subspace(o.ideal, h.dim(), "ideal");
    if (!(ideal.field() == h.field())) throw UsageError(o.ideal + ": ideal lives over " + ideal.field().name());
    auto q = validate_rico(h, ideal);
    if (!q) throw InvariantViolation(o.ideal + ": not a coideal right ideal: " + q.reason());
    return std::move(q).value();
}

std::string hasse_dot(const std::string& name, const std::vector<std::string>& node_labels, const PosetReport& rep)
{
    std::ostringstream os;
    os << "digraph " << name << " {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < node_labels.size(); ++i)
        os << "  n" << i << " [label=\"" << node_labels[i] << "\"];\n";
    for (const auto& [lo, hi] : rep.hasse) os << "  n" << lo << " -> n" << hi << ";\n";
    os << "}\n";
    return os.str();
}

std::string quotient_dot(const QuotientLattice& q)
{
    std::vector<std::string> labels;
    for (const auto& g : q.quotients) labels.push_back("dim " + std::to_string(g.q_dim) + "\\n" + hex(g.ideal.hash()));
    return hasse_dot("quotients", labels, poset_report(q));
}

std::string subspace_dot(const std::string& name, const FinitePoset& p)
{
    std::vector<std::string> labels;
    for (const auto& s : p.elements) labels.push_back("dim " + std::to_string(s.dim()) + "\\n" + hex(s.hash()));
    return hasse_dot(name, labels, poset_report(p));
}

int cmd_validate(const Options& o, std::ostream& out)
{
    Document d = parse_file(o.file);
    bool ok = true;
    auto hopf_part = [&](const HopfAlgebra& h) {
        const auto r = validate_hopf(h);
        out << "hopf algebra over " << h.field().name() << ", dimension " << h.dim() << '\n' << r.to_string();
        ok = ok && r.all_passed();
    };
    if (auto* h = std::get_if<HopfAlgebra>(&d)) {
        hopf_part(apply_mirror(*h, o));
    } else if (auto* a = std::get_if<ComoduleAlgebra>(&d)) {
        hopf_part(a->hopf());
        const auto alg = validate_algebra(a->algebra());
        const auto com = validate_comodule_algebra(*a);
        out << "comodule algebra over " << a->field().name() << ", dimension " << a->dim() << '\n'
            << alg.to_string() << com.to_string();
        ok = ok && alg.all_passed() && com.all_passed();
    } else if (auto* alg = std::get_if<AlgebraData>(&d)) {
        const auto r = validate_algebra(*alg);
        out << "algebra over " << alg->field.name() << ", dimension " << alg->dim << '\n' << r.to_string();
        ok = r.all_passed();
    } else if (auto* s = std::get_if<Subspace>(&d)) {
        out << "subspace of dimension " << s->dim() << " in " << s->field().name() << "^" << s->ambient_dim() << '\n';
    } else {
        const Matrix& m = std::get<LinearMapFile>(d).map;
        out << "linear map " << m.cols() << " -> " << m.rows() << " over " << m.field().name() << '\n';
    }
    return ok ? 0 : 1;
}

int cmd_coinv(const Options& o, std::ostream& out)
{
    const ComoduleAlgebra a = load_comodule(o);
    const GeneralisedQuotient q = load_quotient(o, a.hopf());
    const Subspace k = o.ideal.empty() ? coinvariants(a) : phi(a, q);
    out << (o.ideal.empty() ? "coinvariants A^{co H}" : "coinvariants A^{co H/I}") << ": dimension " << k.dim() << '\n';
    print_basis(out, k, a.algebra().labels);
    return 0;
}

int cmd_quotients(const Options& o, std::ostream& out)
{
    const HopfAlgebra h = load_hopf(o);
    const QuotientLattice q = enumerate_ricos(h, o.enumeration());
    if (o.dot) {
        out << quotient_dot(q);
        return 0;
    }
    const PosetReport rep = poset_report(q);
    out << "generalised quotients: " << q.size() << '\n';
    out << "index  q_dim  ideal_dim  hash              ideal\n";
    for (std::size_t i = 0; i < q.size(); ++i) {
        const auto& g = q.quotients[i];
        out << std::left << std::setw(7) << i << std::setw(7) << g.q_dim << std::setw(11) << g.ideal.dim()
            << hex(g.ideal.hash()) << "  " << g.ideal.to_string() << '\n';
    }
    out << "lattice: " << yes_no(rep.is_lattice) << "  hasse edges: " << rep.hasse.size()
        << "  meet/join agree: " << yes_no(rep.operations_agree.value_or(false)) << '\n';
    return rep.is_lattice && rep.operations_agree.value_or(false) ? 0 : 1;
}

int cmd_hasse(const Options& o, std::ostream& out)
{
    out << quotient_dot(enumerate_ricos(load_hopf(o), o.enumeration()));
    return 0;
}

int cmd_subalgebras(const Options& o, std::ostream& out)
{
    Document d = parse_file(o.file);
    const bool coideal = std::holds_alternative<HopfAlgebra>(d) && !o.regular && o.cleft.empty();
    FinitePoset p;
    std::vector<std::string> labels;
    if (coideal) {
        const HopfAlgebra h = load_hopf(o);
        p = enumerate_coideal_subalgebras(h, o.enumeration());
        labels = h.labels();
    } else {
        const ComoduleAlgebra a = load_comodule(o);
        p = enumerate_subalgebras_over(a.algebra(), coinvariants(a), o.enumeration());
        labels = a.algebra().labels;
    }
    if (o.dot) {
        out << subspace_dot("subalgebras", p);
        return 0;
    }
    out << (coideal ? "left coideal subalgebras: " : "subalgebras containing A^{co H}: ") << p.size() << '\n';
    out << "index  dim  hash              basis\n";
    for (std::size_t i = 0; i < p.size(); ++i)
        out << std::left << std::setw(7) << i << std::setw(5) << p.elements[i].dim() << hex(p.elements[i].hash())
            << "  " << p.elements[i].to_string() << '\n';
    return 0;
}

int cmd_closure(const Options& o, std::ostream& out)
{
    const ComoduleAlgebra a = load_comodule(o);
    const ClosureReport r = closure_report(a, {o.enumeration(), true});
    out << "quotient  q_dim  ideal_hash        coinv_dim  q_galois  closed\n";
    std::size_t n_closed = 0, n_galois = 0;
    bool same = true;
    for (std::size_t i = 0; i < r.quotients.size(); ++i) {
        const auto& q = r.quotients.quotients[i];
        out << std::left << std::setw(10) << i << std::setw(7) << q.q_dim << hex(q.ideal.hash()) << "  "
            << std::setw(11) << r.phi[i].dim() << std::setw(10) << yes_no(r.q_galois[i]) << yes_no(r.closed_quotients[i])
            << '\n';
        n_closed += r.closed_quotients[i];
        n_galois += r.q_galois[i];
        same = same && r.q_galois[i] == r.closed_quotients[i];
    }
    const auto closed_subs = std::count(r.closed_subalgebras.begin(), r.closed_subalgebras.end(), true);
    out << "closed quotients: " << n_closed << '/' << r.quotients.size() << "  q-galois: " << n_galois << '/'
        << r.quotients.size() << "  closed = q-galois: " << yes_no(same) << '\n';
    out << "subalgebras: " << r.subalgebras.size() << "  closed: " << closed_subs << '\n';
    out << "can_H surjective: " << yes_no(r.can_h_surjective) << '\n';
    if (r.violations.empty()) {
        out << "violations: none\n";
        return 0;
    }
    out << "violations: " << r.violations.size() << '\n';
    for (const auto& v : r.violations) out << "  " << v << '\n';
    return 1;
}

int cmd_qgalois(const Options& o, std::ostream& out)
{
    const ComoduleAlgebra a = load_comodule(o);
    const GeneralisedQuotient q = load_quotient(o, a.hopf());
    const CanonicalMapData c = canonical_map(a, q);
    out << "quotient dimension: " << q.q_dim << '\n'
        << "coinvariants dimension: " << c.base.dim() << '\n'
        << "A (x)_B A dimension: " << c.tensor.dim() << '\n'
        << "A (x) Q dimension: " << a.dim() * q.q_dim << '\n'
        << "rank of can: " << rank(c.map) << '\n'
        << "Q-Galois: " << yes_no(c.bijective) << '\n';
    return 0;
}

int cmd_takeuchi(const Options& o, std::ostream& out)
{
    const HopfAlgebra h = load_hopf(o);
    const ComoduleAlgebra reg = regular(h);
    if (!o.subalgebra.empty()) {
        const Subspace k = load_subspace(o.subalgebra, h.dim(), "subalgebra");
        auto valid = validate_coideal_subalgebra(h, k);
        if (!valid) throw InvariantViolation(o.subalgebra + ": " + valid.reason());
        const GeneralisedQuotient q = psi_regular(valid.value());
        const Subspace back = phi(reg, q);
        out << "psi(K) = H/I with I of dimension " << q.ideal.dim() << '\n';
        print_basis(out, q.ideal, h.labels());
        out << "phi(psi(K)) dimension " << back.dim() << "  equals K: " << yes_no(back == k) << '\n';
        return 0;
    }
    const QuotientLattice quots = enumerate_ricos(h, o.enumeration());
    const FinitePoset subs = enumerate_coideal_subalgebras(h, o.enumeration());
    const auto phis = phi_table(reg, quots, o.jobs);
    bool agree = true;
    out << "K  dim  psi_ideal_dim  phi_psi_dim  roundtrip  psi_enum_agrees\n";
    for (std::size_t j = 0; j < subs.size(); ++j) {
        const GeneralisedQuotient q = psi_regular(CoidealSubalgebra{h, subs.elements[j]});
        const std::size_t e = psi_enum_index(subs.elements[j], quots, phis);
        const bool same = quots.quotients[e].ideal == q.ideal;
        agree = agree && same;
        const Subspace back = phi(reg, q);
        out << std::left << std::setw(3) << j << std::setw(5) << subs.elements[j].dim() << std::setw(15) << q.ideal.dim()
            << std::setw(13) << back.dim() << std::setw(11) << yes_no(back == subs.elements[j]) << yes_no(same) << '\n';
    }
    out << "Q  q_dim  phi_dim  psi_phi_roundtrip\n";
    for (std::size_t i = 0; i < quots.size(); ++i) {
        const GeneralisedQuotient back = psi_regular(CoidealSubalgebra{h, phis[i]});
        out << std::left << std::setw(3) << i << std::setw(7) << quots.quotients[i].q_dim << std::setw(9) << phis[i].dim()
            << yes_no(back.ideal == quots.quotients[i].ideal) << '\n';
    }
    return agree ? 0 : 1;
}

int cmd_montgomery(const Options& o, std::ostream& out)
{
    const MontgomeryReport r = check_montgomery_conditions(load_hopf(o), o.enumeration());
    out << "cond1 (every Q is Q-Galois): " << yes_no(r.cond1) << '\n'
        << "cond2 (phi psi K within K): " << yes_no(r.cond2) << '\n'
        << "bijection: " << yes_no(r.bijection) << '\n'
        << "bijection iff cond1 and cond2: " << yes_no(r.consistent()) << '\n';
    return r.consistent() ? 0 : 1;
}

int cmd_normal(const Options& o, std::ostream& out)
{
    const HopfAlgebra h = load_hopf(o);
    if (!o.subalgebra.empty() || !o.ideal.empty()) {
        std::optional<Subspace> k, ideal;
        if (!o.subalgebra.empty()) k = load_subspace(o.subalgebra, h.dim(), "subalgebra");
        if (!o.ideal.empty()) ideal = load_subspace(o.ideal, h.dim(), "ideal");
        if (k) out << "normal subalgebra: " << yes_no(is_normal_subalgebra(h, *k)) << '\n';
        if (ideal) out << "normal ideal: " << yes_no(is_normal_ideal(h, *ideal)) << '\n';
        return 0;
    }
    const NormalReport r = check_normal_restriction(h, o.enumeration());
    out << "normal coideal subalgebras: " << r.normal_subalgebras.size() << '\n';
    for (const auto& k : r.normal_subalgebras) out << "  " << k.to_string() << '\n';
    out << "normal ideals: " << r.normal_ideals.size() << '\n';
    for (const auto& i : r.normal_ideals) out << "  " << i.to_string() << '\n';
    if (r.ok()) {
        out << "restriction to normal elements: ok\n";
        return 0;
    }
    for (const auto& v : r.violations) out << "  " << v << '\n';
    return 1;
}

int cmd_cleft(const Options& o, std::ostream& out)
{
    Document d = parse_file(o.file);
    ComoduleAlgebra a;
    Matrix gamma;
    if (std::holds_alternative<HopfAlgebra>(d) && !o.cleft.empty() && o.gamma.empty()) {
        const CleftData c = trivial_cleft(parse_algebra(o.cleft), load_hopf(o));
        a = c.algebra;
        gamma = c.gamma.map;
        out << "A = B (x) H, dimension " << a.dim() << '\n';
    } else {
        if (o.gamma.empty()) throw UsageError("cleft needs --cleft <algebra file> or --gamma <map file>");
        a = load_comodule(o);
        gamma = parse_map(o.gamma);
    }
    const auto r = verify_cleft(a, gamma);
    if (!r) {
        out << "cleft: no (" << r.reason() << ")\n";
        return 1;
    }
    out << "cleft: yes\n";
    out << "coinvariants dimension: " << coinvariants(a).dim() << '\n';
    return 0;
}

int cmd_bigalois(const Options& o, std::ostream& out)
{
    const ComoduleAlgebra a = load_comodule(o);
    if (o.subalgebra.empty()) {
        const Subspace s = bigalois_space(a);
        out << "(A (x) A)^{co H}: dimension " << s.dim() << '\n';
        print_basis(out, s, {});
        return 0;
    }
    const Subspace b = load_subspace(o.subalgebra, a.dim(), "subalgebra");
    const auto r = bigalois_I(a, b);
    if (!r) {
        out << "(A (x)_B A)^{co H}: undefined (" << r.reason() << ")\n";
        return 1;
    }
    out << "(A (x)_B A)^{co H}: dimension " << r->dim() << '\n';
    print_basis(out, r.value(), {});
    return 0;
}

int cmd_export(const Options& o, const std::string& name, std::ostream& out)
{
    const Field f = Field::parse(o.field);
    HopfAlgebra h;
    if (name == "sweedler")
        h = sweedler(f);
    else if (name == "cyclic")
        h = group_algebra(cyclic_group_table(o.order), f);
    else if (name == "symmetric")
        h = group_algebra(symmetric_group_table(o.order), f);
    else if (name == "taft")
        h = taft(o.order, o.root.empty() ? throw UsageError("taft needs --root") : Scalar::parse(f, o.root), f);
    else if (name == "trivial")
        h = group_algebra(cyclic_group_table(1), f, {"1"});
    else
        throw UsageError("unknown built-in '" + name + "' (sweedler, cyclic, symmetric, taft, trivial)");
    h = apply_mirror(h, o);
    std::string text;
    if (o.kind == "hopf")
        text = serialise(h);
    else if (o.kind == "algebra")
        text = serialise(h.algebra());
    else if (o.kind == "regular")
        text = serialise(regular(h));
    else if (o.kind == "dual")
        text = serialise(dual(h));
    else
        throw UsageError("--as must be hopf, algebra, regular or dual");
    if (o.output.empty()) {
        out << text;
        return 0;
    }
    std::ofstream file(o.output);
    if (!file) throw UsageError("cannot write " + o.output);
    file << text;
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Galois connections between comodule subalgebras and generalised quotients", "hgl"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--mirror", o.mirror, "apply the coopposite Hopf algebra before the command");
    app.add_option("--cap", o.cap, "largest dimension searched by exhaustive enumeration")->check(CLI::Range(1, 12));
    app.add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1, 256));

    std::string export_name;
    std::function<int()> action;
    auto add = [&](const std::string& name, const std::string& help, std::function<int()> fn) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        sub->callback([&action, fn] { action = fn; });
        return sub;
    };
    auto input = [&](CLI::App* sub) { sub->add_option("file", o.file, "input document")->required(); };
    auto comodule_flags = [&](CLI::App* sub) {
        sub->add_flag("--regular", o.regular, "use H coacting on itself");
        sub->add_option("--cleft", o.cleft, "algebra file B; use B (x) H");
    };

    auto* validate = add("validate", "check the axioms of a document", [&] { return cmd_validate(o, out); });
    input(validate);
    auto* coinv = add("coinv", "coinvariants A^{co H} or A^{co H/I}", [&] { return cmd_coinv(o, out); });
    input(coinv);
    comodule_flags(coinv);
    coinv->add_option("--ideal", o.ideal, "subspace file with a coideal right ideal I");
    auto* quotients = add("quotients", "enumerate generalised quotients", [&] { return cmd_quotients(o, out); });
    input(quotients);
    quotients->add_flag("--enumerate", o.enumerate, "exhaustive enumeration (the default)");
    quotients->add_flag("--dot", o.dot, "print the Hasse diagram as DOT");
    auto* subalgebras = add("subalgebras", "enumerate coideal subalgebras or subalgebras over A^{co H}",
                            [&] { return cmd_subalgebras(o, out); });
    input(subalgebras);
    comodule_flags(subalgebras);
    subalgebras->add_flag("--dot", o.dot, "print the Hasse diagram as DOT");
    auto* closure = add("closure", "closed elements and Q-Galois quotients", [&] { return cmd_closure(o, out); });
    input(closure);
    comodule_flags(closure);
    auto* qgalois = add("qgalois", "decide whether can_Q is bijective", [&] { return cmd_qgalois(o, out); });
    input(qgalois);
    comodule_flags(qgalois);
    qgalois->add_option("--ideal", o.ideal, "subspace file with a coideal right ideal I (default I = 0)");
    auto* takeuchi = add("takeuchi", "psi/phi round trips for H coacting on itself", [&] { return cmd_takeuchi(o, out); });
    input(takeuchi);
    takeuchi->add_option("--subalgebra", o.subalgebra, "subspace file with one coideal subalgebra");
    auto* montgomery = add("montgomery", "conditions for the bijection on H", [&] { return cmd_montgomery(o, out); });
    input(montgomery);
    auto* normal = add("normal", "normal subalgebras and ideals", [&] { return cmd_normal(o, out); });
    input(normal);
    normal->add_option("--subalgebra", o.subalgebra, "test one subalgebra");
    normal->add_option("--ideal", o.ideal, "test one ideal");
    auto* cleft = add("cleft", "verify a cleaving map", [&] { return cmd_cleft(o, out); });
    input(cleft);
    comodule_flags(cleft);
    cleft->add_option("--gamma", o.gamma, "map file with the cleaving map H -> A");
    auto* bigalois = add("bigalois", "coinvariants of the codiagonal coaction", [&] { return cmd_bigalois(o, out); });
    input(bigalois);
    comodule_flags(bigalois);
    bigalois->add_option("--subalgebra", o.subalgebra, "base subalgebra B for A (x)_B A");
    auto* hasse = add("hasse", "Hasse diagram of the generalised quotients as DOT", [&] { return cmd_hasse(o, out); });
    input(hasse);
    auto* exp = add("export", "write a built-in Hopf algebra", [&] { return cmd_export(o, export_name, out); });
    exp->add_option("name", export_name, "sweedler, cyclic, symmetric, taft or trivial")->required();
    exp->add_option("--field", o.field, "Q or GF(p)");
    exp->add_option("--order", o.order, "group order, symmetric degree or Taft n");
    exp->add_option("--root", o.root, "primitive root of unity for taft");
    exp->add_option("--as", o.kind, "hopf, algebra, regular or dual");
    exp->add_option("-o,--output", o.output, "output file");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        return action ? action() : 2;
    } catch (const InvariantViolation& e) {
        err << "hgl: property violated: " << e.what() << '\n';
        return 1;
    } catch (const EnumerationUnsupported& e) {
        err << "hgl: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "hgl: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "hgl: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace hgl::cli
