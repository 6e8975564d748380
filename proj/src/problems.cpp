// Copyright 2026 The qacr Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.


#include "qacr/problems.hpp"

#include <charconv>
#include <cmath>
#include <random>
#include <sstream>

namespace qacr {

// trivial problems

IsingModel trivial_ising(Bias J, bool rescaled) {
    if (!(J > 0) || !std::isfinite(J)) throw InputError("trivial problem needs J > 0");
    IsingBuilder b;
    if (rescaled) {
        b.add_quadratic(1, 2, J).add_quadratic(2, 3, 1);
    } else {
        b.add_quadratic(1, 2, 1).add_quadratic(2, 3, 1 / J);
    }
    return b.add_variable(1).add_variable(2).add_variable(3).build();
}

TrivialInteger trivial_integer(std::int64_t mu) {
    if (mu < 1 || mu > 191) throw InputError("trivial integer problem needs 1 <= mu <= 191");
    TrivialInteger out;
    out.encoding = bce_encode(0, 191, mu);
    LinearConstraint g;
    g.constant = 1;
    for (std::size_t i = 0; i < out.encoding.size(); ++i) {
        const auto v = static_cast<Variable>(i);
        out.encoding.variable_ids.push_back(v);
        g.terms[v] = static_cast<Bias>(out.encoding.coefficients[i]);
    }
    out.qubo = perturbed_penalty(g, 1, 0);
    return out;
}

// random instances

QuboModel gka_style_random(const GkaParams& p) {
    if (!(p.j_lo <= p.j_hi) || !(p.h_lo <= p.h_hi)) throw InputError("empty coefficient range");
    if (!(p.density > 0 && p.density <= 1)) throw InputError("density must lie in (0, 1]");
    if (p.integral && (std::ceil(p.j_lo) > std::floor(p.j_hi) || std::ceil(p.h_lo) > std::floor(p.h_hi))) {
        throw InputError("integral draw needs an integer inside each range");
    }
    std::mt19937_64 rng(p.seed);
    auto draw = [&](Bias lo, Bias hi) -> Bias {
        if (p.integral) {
            return static_cast<Bias>(std::uniform_int_distribution<std::int64_t>(
                    static_cast<std::int64_t>(std::ceil(lo)),
                    static_cast<std::int64_t>(std::floor(hi)))(rng));
        }
        return lo == hi ? lo : std::uniform_real_distribution<Bias>(lo, hi)(rng);
    };
    std::bernoulli_distribution keep(p.density);
    QuboBuilder q;
    for (std::size_t i = 0; i < p.n; ++i) {
        const auto v = static_cast<Variable>(i);
        q.add_variable(v).add_linear(v, draw(p.h_lo, p.h_hi));
    }
    for (std::size_t i = 0; i < p.n; ++i) {
        for (std::size_t j = i + 1; j < p.n; ++j) {
            if (keep(rng)) q.add(static_cast<Variable>(i), static_cast<Variable>(j), draw(p.j_lo, p.j_hi));
        }
    }
    return q.build();
}

// parsing

namespace {

struct Token {
    std::string text;
    int line;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream words(line);
        std::string w;
        while (words >> w) out.push_back({w, number});
    }
    return out;
}

class TokenReader {
 public:
    TokenReader(std::vector<Token> tokens, std::string what)
            : tokens_(std::move(tokens)), what_(std::move(what)) {}

    std::size_t remaining() const { return tokens_.size() - pos_; }

    std::int64_t integer(const char* field) {
        const auto& t = next(field);
        std::int64_t v = 0;
        auto [end, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc() || end != t.text.data() + t.text.size()) fail(t, field, "an integer");
        return v;
    }

    double real(const char* field) {
        const auto& t = next(field);
        double v = 0;
        auto [end, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc() || end != t.text.data() + t.text.size() || !std::isfinite(v)) {
            fail(t, field, "a number");
        }
        return v;
    }

    void finish() const {
        if (pos_ < tokens_.size()) {
            throw InputError(what_ + ": line " + std::to_string(tokens_[pos_].line) +
                             ": unexpected trailing token '" + tokens_[pos_].text + "'");
        }
    }

    [[noreturn]] void error(const char* message) const {
        const int line = pos_ == 0 ? 1 : tokens_[pos_ - 1].line;
        throw InputError(what_ + ": line " + std::to_string(line) + ": " + message);
    }

 private:
    const Token& next(const char* field) {
        if (pos_ >= tokens_.size()) {
            const int line = tokens_.empty() ? 1 : tokens_.back().line;
            throw InputError(what_ + ": line " + std::to_string(line) +
                             ": unexpected end of input, expected " + field);
        }
        return tokens_[pos_++];
    }

    [[noreturn]] void fail(const Token& t, const char* field, const char* kind) const {
        throw InputError(what_ + ": line " + std::to_string(t.line) + ": expected " + kind +
                         " for " + field + ", got '" + t.text + "'");
    }

    std::vector<Token> tokens_;
    std::string what_;
    std::size_t pos_ = 0;
};

std::vector<std::uint8_t> bits_of(std::int64_t count, const std::vector<Variable>& variables,
                                  std::span<const Spin> spins) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(count));
    std::size_t i = 0;
    for (std::int64_t v = 0; v < count; ++v) {
        while (i < variables.size() && variables[i] < v) ++i;
        if (i == variables.size() || variables[i] != v) throw MissingVariableError(v);
        bits[static_cast<std::size_t>(v)] = spin_to_bit(spins[i]);
    }
    return bits;
}

}  // namespace

// knapsack

void MkpInstance::validate() const {
    if (n < 1 || m < 1) throw InputError("knapsack needs n >= 1 items and m >= 1 constraints");
    if (std::ssize(profits) != n || std::ssize(weights) != m || std::ssize(capacities) != m) {
        throw InputError("knapsack dimensions are inconsistent");
    }
    for (auto p : profits) {
        if (p <= 0) throw InputError("knapsack profits must be positive");
    }
    for (const auto& row : weights) {
        if (std::ssize(row) != n) throw InputError("knapsack weight row has the wrong length");
        for (auto w : row) {
            if (w < 0) throw InputError("knapsack weights must be non-negative");
        }
    }
    for (auto c : capacities) {
        if (c <= 0) throw InputError("knapsack capacities must be positive");
    }
}

MkpInstance mkp_parse(const std::string& text) {
    auto tokens = tokenize(text);
    TokenReader in(std::move(tokens), "knapsack");
    MkpInstance inst;
    inst.n = in.integer("n");
    inst.m = in.integer("m");
    if (inst.n < 1 || inst.m < 1) in.error("n and m must be positive");
    const auto body = static_cast<std::size_t>(inst.n + inst.m * inst.n + inst.m);
    if (in.remaining() == body + 1) {
        inst.optimum = in.integer("optimum");
    } else if (in.remaining() != body) {
        in.error(("expected " + std::to_string(body) + " or " + std::to_string(body + 1) +
                  " values after the header, found " + std::to_string(in.remaining()))
                         .c_str());
    }
    for (std::int64_t j = 0; j < inst.n; ++j) {
        inst.profits.push_back(in.integer("profit"));
        if (inst.profits.back() <= 0) in.error("profits must be positive");
    }
    inst.weights.assign(static_cast<std::size_t>(inst.m), {});
    for (auto& row : inst.weights) {
        for (std::int64_t j = 0; j < inst.n; ++j) {
            row.push_back(in.integer("weight"));
            if (row.back() < 0) in.error("weights must be non-negative");
        }
    }
    for (std::int64_t i = 0; i < inst.m; ++i) {
        inst.capacities.push_back(in.integer("capacity"));
        if (inst.capacities.back() <= 0) in.error("capacities must be positive");
    }
    in.finish();
    return inst;
}

std::string mkp_serialize(const MkpInstance& inst) {
    inst.validate();
    std::ostringstream out;
    auto row = [&](const std::vector<std::int64_t>& v) {
        for (std::size_t j = 0; j < v.size(); ++j) out << (j ? " " : "") << v[j];
        out << '\n';
    };
    out << inst.n << ' ' << inst.m << '\n' << inst.optimum << '\n';
    row(inst.profits);
    for (const auto& w : inst.weights) row(w);
    row(inst.capacities);
    return out.str();
}

MkpFormulation mkp_to_qubo(const MkpInstance& inst, Bias lambda, std::int64_t mu) {
    inst.validate();
    if (!(lambda > 0)) throw InputError("penalty coefficient must be positive");
    if (mu < 1) throw InputError("coefficient bound mu must be at least 1");

    MkpFormulation out;
    QuboBuilder q;
    for (std::int64_t j = 0; j < inst.n; ++j) {
        q.add_variable(j).add_linear(j, -static_cast<Bias>(inst.profits[static_cast<std::size_t>(j)]));
    }
    Variable next = inst.n;
    for (std::int64_t i = 0; i < inst.m; ++i) {
        const auto c = inst.capacities[static_cast<std::size_t>(i)];
        auto enc = bce_encode(0, c, std::min(mu, c));
        LinearConstraint g;
        for (std::int64_t j = 0; j < inst.n; ++j) {
            const auto w = inst.weights[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (w != 0) g.terms[j] = static_cast<Bias>(w);
        }
        for (std::size_t d = 0; d < enc.size(); ++d) {
            const Variable y = next++;
            enc.variable_ids.push_back(y);
            g.terms[y] = -static_cast<Bias>(enc.coefficients[d]);
            q.add_variable(y);
            out.registry.emplace(y, AuxProvenance{AuxKind::IntegerDigit, 0, 0, i,
                                                  static_cast<std::int64_t>(d),
                                                  static_cast<Bias>(enc.coefficients[d])});
        }
        q.add_model(perturbed_penalty(g, lambda, 0));
        out.slacks.push_back(std::move(enc));
    }
    out.qubo = q.build();
    return out;
}

CheckResult mkp_check(const MkpInstance& inst, std::span<const std::uint8_t> items) {
    if (std::ssize(items) != inst.n) {
        throw std::invalid_argument("expected " + std::to_string(inst.n) + " item bits");
    }
    CheckResult r{true, 0};
    for (std::int64_t i = 0; i < inst.m; ++i) {
        std::int64_t load = 0;
        for (std::int64_t j = 0; j < inst.n; ++j) {
            if (items[static_cast<std::size_t>(j)]) {
                load += inst.weights[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            }
        }
        if (load > inst.capacities[static_cast<std::size_t>(i)]) r.feasible = false;
    }
    std::int64_t profit = 0;
    for (std::int64_t j = 0; j < inst.n; ++j) {
        if (items[static_cast<std::size_t>(j)]) profit += inst.profits[static_cast<std::size_t>(j)];
    }
    r.objective = static_cast<double>(profit);
    return r;
}

std::vector<std::uint8_t> mkp_lift(const MkpFormulation& form, const MkpInstance& inst,
                                   std::span<const std::uint8_t> items) {
    if (!mkp_check(inst, items).feasible) throw InfeasibleError("item assignment violates a capacity");
    std::map<Variable, std::uint8_t> value;
    for (std::int64_t j = 0; j < inst.n; ++j) value[j] = items[static_cast<std::size_t>(j)];
    for (std::int64_t i = 0; i < inst.m; ++i) {
        std::int64_t load = 0;
        for (std::int64_t j = 0; j < inst.n; ++j) {
            if (items[static_cast<std::size_t>(j)]) {
                load += inst.weights[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            }
        }
        const auto& enc = form.slacks[static_cast<std::size_t>(i)];
        const auto digits = bce_bits_for(enc, load);
        for (std::size_t d = 0; d < digits.size(); ++d) value[enc.variable_ids[d]] = digits[d];
    }
    std::vector<std::uint8_t> bits;
    bits.reserve(form.qubo.num_variables());
    for (auto v : form.qubo.variables()) bits.push_back(value.at(v));
    return bits;
}

Checker mkp_checker(const MkpInstance& inst) {
    return [inst](const std::vector<Variable>& variables, std::span<const Spin> spins) {
        return mkp_check(inst, bits_of(inst.n, variables, spins));
    };
}

// quadratic assignment

void QapInstance::validate() const {
    if (n < 1) throw InputError("assignment problem needs n >= 1");
    auto square = [&](const std::vector<std::vector<double>>& a, const char* name) {
        if (std::ssize(a) != n) throw InputError(std::string(name) + " matrix has the wrong size");
        for (const auto& row : a) {
            if (std::ssize(row) != n) throw InputError(std::string(name) + " matrix is not square");
            for (auto x : row) {
                if (!(x >= 0) || !std::isfinite(x)) {
                    throw InputError(std::string(name) + " entries must be finite and non-negative");
                }
            }
        }
    };
    square(flow, "flow");
    square(distance, "distance");
}

QapInstance qap_parse(const std::string& text) {
    TokenReader in(tokenize(text), "assignment");
    QapInstance inst;
    inst.n = in.integer("n");
    if (inst.n < 1) in.error("n must be positive");
    auto matrix = [&](std::vector<std::vector<double>>& a, const char* field) {
        a.assign(static_cast<std::size_t>(inst.n), {});
        for (auto& row : a) {
            for (std::int64_t k = 0; k < inst.n; ++k) {
                row.push_back(in.real(field));
                if (row.back() < 0) in.error("matrix entries must be non-negative");
            }
        }
    };
    matrix(inst.flow, "flow entry");
    matrix(inst.distance, "distance entry");
    in.finish();
    return inst;
}

std::string qap_serialize(const QapInstance& inst) {
    inst.validate();
    std::ostringstream out;
    out.precision(17);
    out << inst.n << "\n\n";
    auto matrix = [&](const std::vector<std::vector<double>>& a) {
        for (const auto& row : a) {
            for (std::size_t k = 0; k < row.size(); ++k) out << (k ? " " : "") << row[k];
            out << '\n';
        }
    };
    matrix(inst.flow);
    out << '\n';
    matrix(inst.distance);
    return out.str();
}

std::vector<LinearConstraint> qap_constraints(const QapInstance& inst) {
    std::vector<LinearConstraint> out;
    for (int axis = 0; axis < 2; ++axis) {
        for (std::int64_t a = 0; a < inst.n; ++a) {
            LinearConstraint g;
            g.constant = 1;
            for (std::int64_t b = 0; b < inst.n; ++b) {
                g.terms[axis == 0 ? qap_variable(inst.n, a, b) : qap_variable(inst.n, b, a)] = 1;
            }
            out.push_back(std::move(g));
        }
    }
    return out;
}

QuboModel qap_to_qubo(const QapInstance& inst, Bias lambda, Bias eps) {
    inst.validate();
    if (!(lambda > 0)) throw InputError("penalty coefficient must be positive");
    const auto n = inst.n;
    QuboBuilder q;
    for (Variable v = 0; v < n * n; ++v) q.add_variable(v);
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = 0; j < n; ++j) {
            const double f = inst.flow[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (f == 0) continue;
            for (std::int64_t k = 0; k < n; ++k) {
                for (std::int64_t l = 0; l < n; ++l) {
                    const double d = inst.distance[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
                    if (d != 0) q.add(qap_variable(n, i, k), qap_variable(n, j, l), f * d);
                }
            }
        }
    }
    for (const auto& g : qap_constraints(inst)) q.add_model(perturbed_penalty(g, lambda, eps));
    return q.build();
}

CheckResult qap_check(const QapInstance& inst, std::span<const std::uint8_t> bits) {
    const auto n = inst.n;
    if (std::ssize(bits) != n * n) {
        throw std::invalid_argument("expected " + std::to_string(n * n) + " assignment bits");
    }
    auto x = [&](std::int64_t i, std::int64_t k) { return bits[static_cast<std::size_t>(i * n + k)] != 0; };
    CheckResult r{true, 0};
    for (std::int64_t a = 0; a < n; ++a) {
        int row = 0, col = 0;
        for (std::int64_t b = 0; b < n; ++b) {
            row += x(a, b);
            col += x(b, a);
        }
        if (row != 1 || col != 1) r.feasible = false;
    }
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t k = 0; k < n; ++k) {
            if (!x(i, k)) continue;
            for (std::int64_t j = 0; j < n; ++j) {
                for (std::int64_t l = 0; l < n; ++l) {
                    if (x(j, l)) {
                        r.objective += inst.flow[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                                       inst.distance[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
                    }
                }
            }
        }
    }
    return r;
}

std::vector<std::uint8_t> qap_bits(const QapInstance& inst, std::span<const std::int64_t> perm) {
    const auto n = inst.n;
    if (std::ssize(perm) != n) throw std::invalid_argument("permutation has the wrong length");
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n * n), 0);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (std::int64_t i = 0; i < n; ++i) {
        const auto k = perm[static_cast<std::size_t>(i)];
        if (k < 0 || k >= n || used[static_cast<std::size_t>(k)]) {
            throw std::invalid_argument("not a permutation");
        }
        used[static_cast<std::size_t>(k)] = true;
        bits[static_cast<std::size_t>(qap_variable(n, i, k))] = 1;
    }
    return bits;
}

Checker qap_checker(const QapInstance& inst) {
    return [inst](const std::vector<Variable>& variables, std::span<const Spin> spins) {
        return qap_check(inst, bits_of(inst.n * inst.n, variables, spins));
    };
}

}  // namespace qacr
