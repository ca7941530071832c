#include "abeltau/config.hpp"

#include "abeltau/error.hpp"
#include "abeltau/examples.hpp"
#include "abeltau/special.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <tuple>

namespace abeltau {

namespace {

// ---- coefficient expressions -------------------------------------------------

struct ExprParser {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        raise(ErrorKind::config, "bad coefficient expression '" + s + "': " + what);
    }

    double expr() {
        double v = term();
        for (;;) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }
    double term() {
        double v = factor();
        for (;;) {
            if (eat('*'))
                v *= factor();
            else if (eat('/')) {
                const double d = factor();
                if (d == 0.0)
                    fail("division by zero");
                v /= d;
            } else
                return v;
        }
    }
    double factor() {
        if (eat('-'))
            return -factor();
        if (eat('+'))
            return factor();
        return primary();
    }
    double primary() {
        skip_ws();
        if (pos >= s.size())
            fail("unexpected end");
        if (eat('(')) {
            const double v = expr();
            if (!eat(')'))
                fail("missing ')'");
            return v;
        }
        if (std::isalpha(static_cast<unsigned char>(s[pos]))) {
            std::size_t start = pos;
            while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            const std::string name = s.substr(start, pos - start);
            if (name == "pi")
                return M_PI;
            if (name == "sqrt" || name == "Gamma") {
                if (!eat('('))
                    fail(name + " needs an argument");
                const double x = expr();
                if (!eat(')'))
                    fail("missing ')'");
                return name == "sqrt" ? std::sqrt(x) : gamma_fn(x);
            }
            if (name == "Beta") {
                if (!eat('('))
                    fail("Beta needs two arguments");
                const double x = expr();
                if (!eat(','))
                    fail("Beta needs two arguments");
                const double y = expr();
                if (!eat(')'))
                    fail("missing ')'");
                return beta_fn(x, y);
            }
            fail("unknown symbol '" + name + "' (whitelist: pi, sqrt, Gamma, Beta)");
        }
        char* end = nullptr;
        const double v = std::strtod(s.c_str() + pos, &end);
        if (end == s.c_str() + pos)
            fail("expected a number");
        pos = static_cast<std::size_t>(end - s.c_str());
        return v;
    }
};

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
        ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
        --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream iss(s);
    std::string tok;
    while (iss >> tok)
        out.push_back(tok);
    return out;
}

[[noreturn]] void fail_line(int line_no, const std::string& what) {
    raise(ErrorKind::config, "line " + std::to_string(line_no) + ": " + what);
}

struct BuiltinEntry {
    const char* name;
    double (*fn)(double);
    std::vector<double> (*series)(int, int);
};

const BuiltinEntry kBuiltins[] = {
    {"arctan_sqrt", &fn_arctan_sqrt, &series_arctan_sqrt},
    {"abel14_arctan_sqrt", &fn_abel14_arctan_sqrt, &series_abel14_arctan_sqrt},
    {"erfc_comb", &fn_erfc_comb, &series_erfc_comb},
};

const BuiltinEntry* find_builtin(const std::string& name) {
    for (const BuiltinEntry& e : kBuiltins)
        if (name == e.name)
            return &e;
    return nullptr;
}

std::string fmt_coeff(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void parse_component_payload(ComponentSpec& spec, const std::string& payload, int line_no) {
    const std::vector<std::string> toks = split_ws(payload);
    if (!toks.empty() && toks[0] == "builtin") {
        if (toks.size() < 2)
            fail_line(line_no, "builtin reference needs a name");
        if (!find_builtin(toks[1]))
            fail_line(line_no, "unknown builtin function '" + toks[1] + "'");
        double scale = 1.0;
        if (toks.size() > 2) {
            std::string rest = payload.substr(payload.find(toks[1]) + toks[1].size());
            scale = eval_coeff_expr(trim(rest));
        }
        spec.builtins.push_back({toks[1], scale});
        return;
    }
    if (toks.size() < 2)
        fail_line(line_no, "expected 'l coefficient' or 'builtin name [scale]'");
    long l = 0;
    try {
        std::size_t used = 0;
        l = std::stol(toks[0], &used);
        if (used != toks[0].size() || l < 0)
            throw std::invalid_argument("");
    } catch (const std::exception&) {
        fail_line(line_no, "bad exponent index '" + toks[0] + "'");
    }
    const std::string rest = trim(payload.substr(payload.find(toks[0]) + toks[0].size()));
    spec.terms.push_back({l, eval_coeff_expr(rest)});
}

} // namespace

double eval_coeff_expr(const std::string& text) {
    ExprParser p{text};
    const double v = p.expr();
    p.skip_ws();
    if (p.pos != text.size())
        p.fail("trailing input");
    if (!std::isfinite(v))
        p.fail("does not evaluate to a finite number");
    return v;
}

bool is_builtin_function(const std::string& name) { return find_builtin(name) != nullptr; }

bool ProblemConfig::has_exact() const {
    for (const ComponentSpec& c : exact)
        if (!c.empty())
            return true;
    return false;
}

ProblemConfig parse_config(const std::string& text) {
    ProblemConfig cfg;
    std::vector<std::tuple<int, std::string, std::string>> pending; // line, key, payload

    std::istringstream iss(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(iss, raw)) {
        ++line_no;
        const std::size_t hash = raw.find('#');
        std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty())
            continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            fail_line(line_no, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string payload = trim(line.substr(eq + 1));
        if (key == "n") {
            if (cfg.n != 0)
                fail_line(line_no, "dimension given twice");
            try {
                cfg.n = std::stoi(payload);
            } catch (const std::exception&) {
                fail_line(line_no, "bad dimension '" + payload + "'");
            }
            if (cfg.n < 1 || cfg.n > 16)
                fail_line(line_no, "dimension must be in 1..16");
            cfg.alphas.assign(static_cast<std::size_t>(cfg.n) * cfg.n, Rational(1, 1));
            cfg.kernels.assign(static_cast<std::size_t>(cfg.n) * cfg.n, {});
            cfg.forcing.assign(static_cast<std::size_t>(cfg.n), {});
            cfg.exact.assign(static_cast<std::size_t>(cfg.n), {});
            continue;
        }
        pending.emplace_back(line_no, key, payload);
    }
    if (cfg.n == 0)
        raise(ErrorKind::config, "config must set the dimension 'n' first");

    auto component_index = [&](const std::string& tok, int line) {
        int i = 0;
        try {
            i = std::stoi(tok);
        } catch (const std::exception&) {
            fail_line(line, "bad component index '" + tok + "'");
        }
        if (i < 1 || i > cfg.n)
            fail_line(line, "component index " + tok + " outside 1.." + std::to_string(cfg.n));
        return i - 1;
    };

    for (const auto& [line, key, payload] : pending) {
        const std::vector<std::string> kt = split_ws(key);
        if (kt.empty())
            fail_line(line, "empty key");
        if (kt[0] == "alpha") {
            if (kt.size() != 3)
                fail_line(line, "alpha needs two indices: alpha i j = a/b");
            const int i = component_index(kt[1], line), j = component_index(kt[2], line);
            const Rational a = parse_rational(payload);
            if (a.num <= 0 || a.num > a.den)
                fail_line(line, "exponent " + payload + " violates 0 < a/b <= 1");
            cfg.alphas[static_cast<std::size_t>(i) * cfg.n + j] = a;
        } else if (kt[0] == "kernel") {
            if (kt.size() != 3)
                fail_line(line, "kernel needs two indices: kernel i j = p q coeff");
            const int i = component_index(kt[1], line), j = component_index(kt[2], line);
            const std::vector<std::string> toks = split_ws(payload);
            if (toks.size() < 3)
                fail_line(line, "kernel term needs 'p q coefficient'");
            int p = 0, q = 0;
            try {
                p = std::stoi(toks[0]);
                q = std::stoi(toks[1]);
            } catch (const std::exception&) {
                fail_line(line, "bad kernel powers");
            }
            if (p < 0 || q < 0 || p > 32 || q > 32)
                fail_line(line, "kernel powers must lie in 0..32");
            std::size_t cut = payload.find(toks[1], payload.find(toks[0]) + toks[0].size());
            const std::string rest = trim(payload.substr(cut + toks[1].size()));
            cfg.kernels[static_cast<std::size_t>(i) * cfg.n + j].push_back({p, q, eval_coeff_expr(rest)});
        } else if (kt[0] == "forcing" || kt[0] == "exact") {
            if (kt.size() != 2)
                fail_line(line, kt[0] + " needs one index: " + kt[0] + " i = ...");
            const int i = component_index(kt[1], line);
            auto& side = (kt[0] == "forcing") ? cfg.forcing : cfg.exact;
            parse_component_payload(side[static_cast<std::size_t>(i)], payload, line);
        } else {
            fail_line(line, "unknown key '" + kt[0] + "'");
        }
    }
    return cfg;
}

ProblemConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        raise(ErrorKind::config, "cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string serialize_config(const ProblemConfig& cfg) {
    std::ostringstream out;
    out << "n = " << cfg.n << "\n";
    for (int i = 0; i < cfg.n; ++i)
        for (int j = 0; j < cfg.n; ++j)
            out << "alpha " << (i + 1) << " " << (j + 1) << " = "
                << to_string(cfg.alphas[static_cast<std::size_t>(i) * cfg.n + j]) << "\n";
    for (int i = 0; i < cfg.n; ++i)
        for (int j = 0; j < cfg.n; ++j) {
            std::vector<KernelTerm> terms = cfg.kernels[static_cast<std::size_t>(i) * cfg.n + j];
            std::sort(terms.begin(), terms.end(), [](const KernelTerm& a, const KernelTerm& b) {
                return std::pair(a.p, a.q) < std::pair(b.p, b.q);
            });
            for (const KernelTerm& t : terms)
                out << "kernel " << (i + 1) << " " << (j + 1) << " = " << t.p << " " << t.q << " "
                    << fmt_coeff(t.coeff) << "\n";
        }
    auto emit_component = [&](const char* key, const std::vector<ComponentSpec>& specs) {
        for (int i = 0; i < cfg.n; ++i) {
            ComponentSpec spec = specs[static_cast<std::size_t>(i)];
            std::sort(spec.terms.begin(), spec.terms.end(),
                      [](const ForcingTerm& a, const ForcingTerm& b) { return a.l < b.l; });
            for (const BuiltinRef& b : spec.builtins)
                out << key << " " << (i + 1) << " = builtin " << b.name << " " << fmt_coeff(b.scale)
                    << "\n";
            for (const ForcingTerm& t : spec.terms)
                out << key << " " << (i + 1) << " = " << t.l << " " << fmt_coeff(t.coeff) << "\n";
        }
    };
    emit_component("forcing", cfg.forcing);
    emit_component("exact", cfg.exact);
    return out.str();
}

namespace {

// one component's forcing: exact terms plus scaled builtin specials
Forcing make_forcing(const ComponentSpec& spec, int gamma) {
    if (spec.empty())
        return Forcing();

    FracPoly exact(gamma);
    for (const ForcingTerm& t : spec.terms)
        exact.add_term(static_cast<std::size_t>(t.l), t.coeff);

    if (spec.builtins.empty())
        return Forcing::exact(std::move(exact));

    std::vector<std::pair<const BuiltinEntry*, double>> fns;
    for (const BuiltinRef& b : spec.builtins)
        fns.emplace_back(find_builtin(b.name), b.scale);

    auto value = [exact, fns](double t) {
        double v = exact.eval(t);
        for (const auto& [e, scale] : fns)
            v += scale * e->fn(t);
        return v;
    };
    auto series = [exact, fns, gamma](int M) {
        std::vector<double> c(static_cast<std::size_t>(M) + 1, 0.0);
        for (long l = 0; l <= exact.max_index() && l <= M; ++l)
            c[static_cast<std::size_t>(l)] = exact.coeff(static_cast<std::size_t>(l));
        for (const auto& [e, scale] : fns) {
            const std::vector<double> s = e->series(M, gamma);
            for (std::size_t k = 0; k < c.size(); ++k)
                c[k] += scale * s[k];
        }
        return c;
    };
    return Forcing::callable(value, series);
}

} // namespace

Problem config_to_problem(const ProblemConfig& cfg) {
    if (cfg.n < 1)
        raise(ErrorKind::config, "config has no dimension");

    long gamma = 1;
    for (const Rational& a : cfg.alphas)
        gamma = std::lcm(gamma, a.den);

    std::vector<FracBivar> kernels;
    kernels.reserve(cfg.kernels.size());
    for (const std::vector<KernelTerm>& terms : cfg.kernels) {
        if (terms.empty()) {
            kernels.emplace_back();
            continue;
        }
        int deg = 0;
        for (const KernelTerm& t : terms)
            deg = std::max({deg, t.p, t.q});
        FracBivar k(static_cast<int>(gamma), deg);
        for (const KernelTerm& t : terms)
            k.set_coeff(t.p, t.q, k.coeff(t.p, t.q) + t.coeff);
        kernels.push_back(std::move(k));
    }

    std::vector<Forcing> forcing;
    forcing.reserve(static_cast<std::size_t>(cfg.n));
    for (const ComponentSpec& spec : cfg.forcing)
        forcing.push_back(make_forcing(spec, static_cast<int>(gamma)));

    return Problem::build(cfg.n, cfg.alphas, std::move(kernels), std::move(forcing));
}

std::vector<std::function<double(double)>> exact_solution_fns(const ProblemConfig& cfg) {
    if (!cfg.has_exact())
        return {};
    long gamma = 1;
    for (const Rational& a : cfg.alphas)
        gamma = std::lcm(gamma, a.den);
    std::vector<std::function<double(double)>> out;
    out.reserve(static_cast<std::size_t>(cfg.n));
    for (const ComponentSpec& spec : cfg.exact) {
        Forcing f = make_forcing(spec, static_cast<int>(gamma));
        out.push_back([f = std::move(f)](double t) { return f.eval(t); });
    }
    return out;
}

} // namespace abeltau
