// Command-line front end: plane counts, the Fermat catalog, lattice checks.

#include "splitcubic/ds_module.hpp"
#include "splitcubic/errors.hpp"
#include "splitcubic/fermat.hpp"
#include "splitcubic/hesse.hpp"
#include "splitcubic/lattice.hpp"
#include "splitcubic/linalg.hpp"
#include "splitcubic/plane.hpp"
#include "splitcubic/serialize.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace splitcubic;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitDomain = 2;
constexpr int kExitUsage = 64;

enum class Format { Plain, Json, Csv };

struct Options {
    std::string format = "plain";
    bool json = false;
    std::string field;

    [[nodiscard]] Format output() const
    {
        if (json || format == "json")
            return Format::Json;
        return format == "csv" ? Format::Csv : Format::Plain;
    }
};

// Raised after a report is printed when the computation did not check out.
struct VerificationFailure {
    std::string message;
};

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string join(const std::vector<Integer>& v, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? sep : "") + to_string(v[i]);
    return out;
}

std::string matrix_text(const IntMatrix& m, const std::string& sep = " ")
{
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += join(std::vector<Integer>(m.row(i).begin(), m.row(i).end()), sep);
        out += "\n";
    }
    return out;
}

std::string inline_matrix(const IntMatrix& m)
{
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows(); ++i)
        out += (i ? ",[" : "[") + join(std::vector<Integer>(m.row(i).begin(), m.row(i).end()), ",") + "]";
    return out + "]";
}

// Variable name used when printing elements of a field.
std::string field_var(const FieldPtr& field)
{
    if (field->degree() == 2)
        return "w";
    return field->degree() == 1 ? "t" : "z";
}

// ------------------------------------------------------------ lambda input

std::string strip_spaces(std::string s)
{
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    return s;
}

bool mentions_surd(const std::string& text) { return text.find("sqrt") != std::string::npos; }

// integer | p/q | a+b*sqrtN with N in {3, -3}
FieldElement parse_lambda(const std::string& raw, const FieldPtr& field)
{
    const std::string text = strip_spaces(raw);
    if (text.empty())
        throw Error(ErrorCode::ParseError, "empty lambda");
    const auto pos = text.find("sqrt");
    if (pos == std::string::npos)
        return FieldElement(field, parse_rational(text));

    std::string radicand = text.substr(pos + 4);
    if (radicand.size() >= 2 && radicand.front() == '(' && radicand.back() == ')')
        radicand = radicand.substr(1, radicand.size() - 2);
    if (radicand != "3" && radicand != "-3")
        throw Error(ErrorCode::ParseError, "only sqrt3 and sqrt-3 are supported, got '" + raw + "'");

    std::string prefix = text.substr(0, pos);
    std::string a_text, b_text = "1";
    if (!prefix.empty() && prefix.back() == '*') {
        prefix.pop_back();
        std::size_t split = 0;
        for (std::size_t i = prefix.size(); i-- > 1;)
            if (prefix[i] == '+' || prefix[i] == '-') {
                split = i;
                break;
            }
        a_text = prefix.substr(0, split);
        b_text = prefix.substr(split);
    } else if (!prefix.empty()) {
        const char sign = prefix.back();
        if (sign != '+' && sign != '-')
            throw Error(ErrorCode::ParseError, "cannot read lambda '" + raw + "'");
        a_text = prefix.substr(0, prefix.size() - 1);
        b_text = sign == '-' ? "-1" : "1";
    }
    const Rational a = a_text.empty() ? Rational(0) : parse_rational(a_text);
    const Rational b = parse_rational(b_text);
    return FieldElement(field, a) + FieldElement::named(field, "sqrt" + radicand) * b;
}

FieldPtr pick_field(const Options& opt, std::initializer_list<std::string> lambdas)
{
    if (!opt.field.empty())
        return NumberField::preset(opt.field);
    for (const auto& l : lambdas)
        if (mentions_surd(l))
            return NumberField::cyclotomic12();
    return NumberField::eisenstein();
}

// ----------------------------------------------------------------- count

void cmd_count(const Options& opt, const std::string& l1_text, const std::string& l2_text, bool enumerate)
{
    const FieldPtr field = pick_field(opt, {l1_text, l2_text});
    const FieldElement l1 = parse_lambda(l1_text, field);
    const FieldElement l2 = parse_lambda(l2_text, field);
    const FieldElement j1 = j_invariant(l1);
    const FieldElement j2 = j_invariant(l2);
    const bool equivalent = j1 == j2;
    const std::size_t aut = equivalent ? aut_order(l1) : 0;
    const std::size_t total = cubic_plane_count(l1, l2);
    const std::string var = field_var(field);

    std::optional<PlaneEnumeration> enumerated;
    if (enumerate)
        enumerated = enumerate_hesse_planes(l1, l2);

    std::vector<std::pair<std::string, std::string>> rows{
        {"field", field->label()},
        {"lambda1", l1.to_string(var)},
        {"lambda2", l2.to_string(var)},
        {"j1", j1.to_string(var)},
        {"j2", j2.to_string(var)},
        {"equivalent", equivalent ? "true" : "false"},
        {"aut_order", std::to_string(aut)},
        {"planes", std::to_string(total)},
    };
    if (enumerated) {
        rows.emplace_back("enumerated_rank2", std::to_string(enumerated->rank2.size()));
        rows.emplace_back("enumerated_rank3", std::to_string(enumerated->rank3.size()));
        rows.emplace_back("enumerated_total", std::to_string(enumerated->total()));
    }

    switch (opt.output()) {
    case Format::Json: {
        Json j = Json::object();
        for (const auto& [k, v] : rows)
            j[k] = v;
        j["equivalent"] = equivalent;
        j["aut_order"] = aut;
        j["planes"] = total;
        if (enumerated) {
            j["enumerated_rank2"] = enumerated->rank2.size();
            j["enumerated_rank3"] = enumerated->rank3.size();
            j["enumerated_total"] = enumerated->total();
        }
        emit(j);
        break;
    }
    case Format::Csv:
        std::cout << "key,value\n";
        for (const auto& [k, v] : rows)
            std::cout << k << "," << v << "\n";
        break;
    case Format::Plain:
        for (const auto& [k, v] : rows)
            std::cout << k << ": " << v << "\n";
        break;
    }
    if (enumerated && enumerated->total() != total)
        throw VerificationFailure{"enumeration found " + std::to_string(enumerated->total()) +
                                  " planes, formula gives " + std::to_string(total)};
}

// ---------------------------------------------------------------- fermat

void cmd_fermat_planes(const Options& opt)
{
    const FermatPlaneSet set = all_fermat_planes();
    auto rows_of = [&](const Plane& s) {
        std::vector<std::string> cells;
        for (const auto& x : s.canonical().entries())
            cells.push_back(x.to_string("w"));
        return cells;
    };
    std::vector<std::pair<int, const Plane*>> listed;
    for (const auto& s : set.rank2)
        listed.emplace_back(2, &s);
    for (const auto& s : set.rank3)
        listed.emplace_back(3, &s);

    switch (opt.output()) {
    case Format::Json: {
        Json planes = Json::array();
        for (const auto& [r, s] : listed)
            planes.push_back({{"rank", r}, {"canonical", to_json(*s)}});
        emit({{"count", listed.size()}, {"rank2", set.rank2.size()}, {"rank3", set.rank3.size()}, {"planes", planes}});
        break;
    }
    case Format::Csv:
        std::cout << "rank,a00,a01,a02,a03,a04,a05,a10,a11,a12,a13,a14,a15,a20,a21,a22,a23,a24,a25\n";
        for (const auto& [r, s] : listed) {
            std::cout << r;
            for (const auto& c : rows_of(*s))
                std::cout << "," << c;
            std::cout << "\n";
        }
        break;
    case Format::Plain:
        std::cout << "rank2: " << set.rank2.size() << "\nrank3: " << set.rank3.size() << "\ntotal: " << listed.size()
                  << "\n";
        for (const auto& [r, s] : listed) {
            const auto cells = rows_of(*s);
            std::cout << "rank " << r << ": [";
            for (std::size_t i = 0; i < 3; ++i) {
                std::cout << (i ? "; " : "");
                for (std::size_t j = 0; j < 6; ++j)
                    std::cout << (j ? ", " : "") << cells[6 * i + j];
            }
            std::cout << "]\n";
        }
        break;
    }
    if (listed.size() != 405)
        throw VerificationFailure{"expected 405 planes, found " + std::to_string(listed.size())};
}

void cmd_fermat_gram(const Options& opt)
{
    const IntMatrix m = gram_matrix(build_S_basis());
    switch (opt.output()) {
    case Format::Json:
        emit({{"gram", to_json(m)}, {"determinant", to_json(det_bareiss(m))}});
        break;
    case Format::Csv:
        std::cout << matrix_text(m, ",");
        break;
    case Format::Plain:
        std::cout << matrix_text(m) << "det=" << det_bareiss(m) << "\n";
        break;
    }
}

void cmd_fermat_verify(const Options& opt)
{
    const IntMatrix m = gram_matrix(build_S_basis());
    const IntMatrix golden = load_appendix_golden();
    const Integer det = det_bareiss(m);
    std::vector<std::string> diffs;
    if (golden.rows() != m.rows() || golden.cols() != m.cols()) {
        diffs.push_back("golden matrix is " + std::to_string(golden.rows()) + "x" + std::to_string(golden.cols()));
    } else {
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (m(i, j) + 1 != golden(i, j))
                    diffs.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): computed " +
                                    to_string(Integer(m(i, j) + 1)) + ", golden " + to_string(golden(i, j)));
    }
    const bool ok = diffs.empty() && det == 81;
    const std::string shape = std::to_string(m.rows()) + "x" + std::to_string(m.cols());
    switch (opt.output()) {
    case Format::Json: {
        Json d = Json::array();
        for (const auto& s : diffs)
            d.push_back(s);
        emit({{"shape", shape}, {"match", diffs.empty()}, {"determinant", to_json(det)}, {"diff", d}});
        break;
    }
    case Format::Csv:
        std::cout << "shape,match,determinant\n" << shape << "," << (diffs.empty() ? "true" : "false") << "," << det
                  << "\n";
        break;
    case Format::Plain:
        if (diffs.empty())
            std::cout << shape << " OK, det=" << det << "\n";
        else
            for (const auto& s : diffs)
                std::cout << "mismatch " << s << "\n";
        break;
    }
    if (!ok)
        throw VerificationFailure{diffs.empty() ? "determinant is " + to_string(det) + ", expected 81"
                                                : std::to_string(diffs.size()) + " cells differ from the golden file"};
}

void cmd_fermat_decompose(const Options& opt, const std::string& index)
{
    const std::vector<Plane> basis = build_S_basis();
    const IntMatrix gram = gram_matrix(basis);
    std::vector<LabeledPlane> targets;
    if (index.empty()) {
        targets = build_L_planes();
    } else {
        const auto [j, beta] = parse_plane_label(index);
        targets.push_back({j, beta, l_plane(j, beta)});
    }

    Json out = Json::array();
    if (opt.output() == Format::Csv) {
        std::cout << "label";
        for (int i = 1; i <= 19; ++i)
            std::cout << ",m" << i;
        std::cout << "\n";
    }
    for (const auto& t : targets) {
        const Decomposition d = decompose(t.plane, basis, gram);
        if (d.bordered_det != 0)
            throw VerificationFailure{t.label() + ": bordered determinant " + to_string(d.bordered_det)};
        switch (opt.output()) {
        case Format::Json: {
            Json m = Json::array();
            for (const auto& x : d.m)
                m.push_back(to_json(x));
            Json v = Json::array();
            for (const auto& x : d.v)
                v.push_back(to_json(x));
            out.push_back({{"label", t.label()}, {"m", m}, {"v", v}, {"borderedDet", to_json(d.bordered_det)}});
            break;
        }
        case Format::Csv:
            std::cout << '"' << t.label() << '"' << "," << join(d.m, ",") << "\n";
            break;
        case Format::Plain:
            std::cout << t.label() << ": " << join(d.m, " ") << "\n";
            break;
        }
    }
    if (opt.output() == Format::Json)
        emit(out);
}

// ------------------------------------------------------------- ds-torsion

void cmd_ds_torsion(const Options& opt)
{
    const TorsionCertificate cert = torsion_free_certificate();
    switch (opt.output()) {
    case Format::Json: {
        Json f = Json::array();
        for (const auto& x : cert.invariant_factors)
            f.push_back(to_json(x));
        emit({{"torsionFree", cert.torsion_free},
              {"invariantFactors", f},
              {"subTableMonomials", {"1", "t3", "t1*t3", "t1*t3*t5"}},
              {"subTable", to_json(cert.sub_table)},
              {"subTableDet", to_json(cert.sub_table_det)}});
        break;
    }
    case Format::Csv:
        std::cout << "torsion_free,invariant_factors,sub_table_det\n"
                  << (cert.torsion_free ? "true" : "false") << "," << join(cert.invariant_factors, ";") << ","
                  << cert.sub_table_det << "\n";
        break;
    case Format::Plain:
        std::cout << "torsion-free: " << (cert.torsion_free ? "true" : "false") << "; invariants "
                  << join(cert.invariant_factors, ",") << "\n"
                  << "sub-table on 1, t3, t1*t3, t1*t3*t5:\n"
                  << matrix_text(cert.sub_table) << "sub-table det=" << cert.sub_table_det << "\n";
        break;
    }
    if (!cert.torsion_free)
        throw VerificationFailure{"relation module has torsion"};
}

// ---------------------------------------------------------------- lattice

void print_report(const Options& opt, const LatticeReport& r, Json extra = Json::object())
{
    switch (opt.output()) {
    case Format::Json: {
        Json j = to_json(r);
        for (auto it = extra.begin(); it != extra.end(); ++it)
            j[it.key()] = it.value();
        emit(j);
        break;
    }
    case Format::Csv:
        std::cout << "rank,determinant,snf,definiteness\n"
                  << r.rank << "," << r.determinant << "," << join(r.snf_diagonal, ";") << ","
                  << to_string(r.definiteness) << "\n";
        break;
    case Format::Plain:
        std::cout << "rank: " << r.rank << "\ndeterminant: " << r.determinant << "\nsnf: " << join(r.snf_diagonal, ",")
                  << "\ndefiniteness: " << to_string(r.definiteness) << "\n";
        for (auto it = extra.begin(); it != extra.end(); ++it)
            std::cout << it.key() << ": " << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump())
                      << "\n";
        break;
    }
}

void cmd_lattice_invariants(const Options& opt, const std::string& input)
{
    print_report(opt, lattice_invariants(load_int_matrix(input)));
}

void cmd_lattice_im_phi(const Options& opt, unsigned d)
{
    const IntMatrix g = im_phi_gram(d);
    const std::size_t genus = (d - 1) * (d - 2) / 2;
    const IntMatrix u = u_lattice(Integer(d), 2 * genus * genus);
    const bool congruent = congruence_check(im_phi_flip(d), g, u);
    print_report(opt, lattice_invariants(g), {{"congruentToU", congruent}});
    if (!congruent)
        throw VerificationFailure{"flip does not carry Im phi to U(d)"};
}

void cmd_lattice_certify(const Options& opt)
{
    const LatticeReport algebraic = lattice_invariants(gram_matrix(build_S_basis()));
    const IntMatrix t = im_phi_gram(3);
    const LatticeReport transcendental = lattice_invariants(t);
    const bool congruent = congruence_check(im_phi_flip(3), t, u_lattice(Integer(3), 2));
    const bool complement =
        complement_disc_check(algebraic.determinant, transcendental.determinant, algebraic.rank, transcendental.rank, 23);
    const bool positive = algebraic.definiteness == Definiteness::Positive;
    switch (opt.output()) {
    case Format::Json:
        emit({{"algebraic", to_json(algebraic)},
              {"imPhi", to_json(transcendental)},
              {"congruentToU3U3", congruent},
              {"complementDiscCheck", complement},
              {"algebraicPositiveDefinite", positive}});
        break;
    case Format::Csv:
        std::cout << "check,value\ncongruent_to_U3U3," << congruent << "\ncomplement_disc_check," << complement
                  << "\nalgebraic_positive_definite," << positive << "\n";
        break;
    case Format::Plain:
        std::cout << "algebraic: rank " << algebraic.rank << ", det " << algebraic.determinant << ", "
                  << to_string(algebraic.definiteness) << "\n"
                  << "im phi: rank " << transcendental.rank << ", det " << transcendental.determinant << ", "
                  << to_string(transcendental.definiteness) << "\n"
                  << "congruent to U(3)+U(3): " << (congruent ? "true" : "false") << "\n"
                  << "complement check (ambient rank 23): " << (complement ? "true" : "false") << "\n";
        break;
    }
    if (!(congruent && complement && positive))
        throw VerificationFailure{"lattice certificate failed"};
}

// ----------------------------------------------------------- shioda-mitani

void cmd_shioda_mitani(const Options& opt, const std::string& a, const std::string& b, const std::string& c)
{
    const ShiodaMitaniResult r = shioda_mitani(parse_integer(a), parse_integer(b), parse_integer(c));
    switch (opt.output()) {
    case Format::Json:
        emit({{"tau1", to_json(r.tau1)},
              {"tau2", to_json(r.tau2)},
              {"delta", to_json(r.delta)},
              {"transLattice", to_json(r.trans_lattice)}});
        break;
    case Format::Csv:
        std::cout << "tau1,tau2,delta,T\n"
                  << r.tau1.to_string() << "," << r.tau2.to_string() << "," << r.delta << ",\""
                  << inline_matrix(r.trans_lattice) << "\"\n";
        break;
    case Format::Plain:
        std::cout << "tau1=" << r.tau1.to_string() << " tau2=" << r.tau2.to_string()
                  << "; T(-3)=" << inline_matrix(r.trans_lattice) << "\n";
        break;
    }
}

// ------------------------------------------------------------- flex-table

void cmd_flex_table(const Options& opt, const std::string& lambda_text)
{
    const FieldPtr field = pick_field(opt, {lambda_text});
    const FieldElement lambda = parse_lambda(lambda_text, field);
    const MultiPoly f = hesse_form(lambda);
    const std::string var = field_var(field);
    const auto table = flex_table(lambda);

    bool all_ok = true;
    Json rows = Json::array();
    if (opt.output() == Format::Csv)
        std::cout << "point,tangent,verified\n";
    for (const auto& flex : table) {
        const bool ok = verify_flex(f, flex.point, flex.tangent, 3);
        all_ok = all_ok && ok;
        const auto p = normalize_projective(flex.point);
        std::string point = "[" + p[0].to_string(var) + ":" + p[1].to_string(var) + ":" + p[2].to_string(var) + "]";
        std::string tangent;
        for (std::size_t i = 0; i < 3; ++i)
            tangent += (i ? ", " : "") + flex.tangent[i].to_string(var);
        switch (opt.output()) {
        case Format::Json: {
            Json j = to_json(flex);
            j["pointText"] = point;
            j["verified"] = ok;
            rows.push_back(j);
            break;
        }
        case Format::Csv:
            std::cout << '"' << point << "\",\"" << tangent << "\"," << (ok ? "true" : "false") << "\n";
            break;
        case Format::Plain:
            std::cout << point << "  tangent (" << tangent << ")  " << (ok ? "verified" : "FAILED") << "\n";
            break;
        }
    }
    if (opt.output() == Format::Json)
        emit({{"lambda", lambda.to_string(var)}, {"field", field->label()}, {"flexes", rows}});
    if (!all_ok)
        throw VerificationFailure{"some flex rows did not verify"};
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Planes and lattices of split cubic fourfolds F1(x) = F2(y)"};
    app.fallthrough();
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"plain", "json", "csv"}))
        ->capture_default_str();
    app.add_flag("--json", opt.json, "Shorthand for --format json");
    app.add_option("--field", opt.field, "Coefficient field: Q, Qzeta3 or Qzeta12")
        ->check(CLI::IsMember({"Q", "Qzeta3", "Qzeta12"}));

    std::function<void()> action;

    auto* count = app.add_subcommand("count", "Plane count on H(l1)(x) = H(l2)(y)");
    std::string l1, l2;
    bool enumerate = false;
    count->add_option("--l1", l1, "lambda of the first Hesse cubic")->required();
    count->add_option("--l2", l2, "lambda of the second Hesse cubic")->required();
    count->add_flag("--enumerate", enumerate, "Also enumerate the planes and compare");
    count->callback([&] { action = [&] { cmd_count(opt, l1, l2, enumerate); }; });

    auto* fermat = app.add_subcommand("fermat", "Fermat cubic fourfold catalog");
    fermat->require_subcommand(1);
    fermat->add_subcommand("planes", "All 405 planes")->callback([&] { action = [&] { cmd_fermat_planes(opt); }; });
    fermat->add_subcommand("gram", "Gram matrix of S1..S19")->callback([&] {
        action = [&] { cmd_fermat_gram(opt); };
    });
    fermat->add_subcommand("verify-appendix", "Recompute M + I and compare with the golden file")->callback([&] {
        action = [&] { cmd_fermat_verify(opt); };
    });
    auto* decompose_cmd = fermat->add_subcommand("decompose", "Integral decomposition of L_{J,beta}");
    std::string index;
    decompose_cmd->add_option("--index", index, "e.g. \"J1,(w,1,1)\"; all 108 when omitted");
    decompose_cmd->callback([&] { action = [&] { cmd_fermat_decompose(opt, index); }; });

    app.add_subcommand("ds-torsion", "Torsion certificate of the relation module")->callback([&] {
        action = [&] { cmd_ds_torsion(opt); };
    });

    auto* lattice = app.add_subcommand("lattice", "Integral lattice tools");
    lattice->require_subcommand(1);
    auto* inv = lattice->add_subcommand("invariants", "Rank, determinant, SNF, definiteness");
    std::string input;
    inv->add_option("--input", input, "Gram matrix JSON file")->required()->check(CLI::ExistingFile);
    inv->callback([&] { action = [&] { cmd_lattice_invariants(opt, input); }; });
    auto* im_phi = lattice->add_subcommand("im-phi", "Gram of Im phi and its congruence to U(d)");
    unsigned degree = 3;
    im_phi->add_option("--degree,-d", degree, "Degree d >= 3")->capture_default_str();
    im_phi->callback([&] { action = [&] { cmd_lattice_im_phi(opt, degree); }; });
    lattice->add_subcommand("certify", "Discriminant and congruence certificates for the Fermat fourfold")
        ->callback([&] { action = [&] { cmd_lattice_certify(opt); }; });

    auto* sm = app.add_subcommand("shioda-mitani", "tau values and transcendental lattice from (a, b, c)");
    std::string a, b, c;
    sm->add_option("-a", a)->required();
    sm->add_option("-b", b)->required();
    sm->add_option("-c", c)->required();
    sm->callback([&] { action = [&] { cmd_shioda_mitani(opt, a, b, c); }; });

    auto* flex = app.add_subcommand("flex-table", "The nine flexes of a Hesse cubic");
    std::string lambda;
    flex->add_option("--lambda", lambda)->required();
    flex->callback([&] { action = [&] { cmd_flex_table(opt, lambda); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        action();
        std::cout.flush();
        return kExitOk;
    } catch (const VerificationFailure& f) {
        std::cout.flush();
        std::cerr << "verification failed: " << f.message << "\n";
        return kExitVerification;
    } catch (const Error& e) {
        std::cout.flush();
        std::cerr << e.what() << "\n";
        switch (e.code()) {
        case ErrorCode::ParseError:
            return kExitUsage;
        case ErrorCode::VerificationFailed:
        case ErrorCode::KernelRankUnexpected:
        case ErrorCode::NonIntegralKernel:
            return kExitVerification;
        default:
            return kExitDomain;
        }
    }
}
