#include "szego/poly_io.hpp"

#include <cctype>
#include <functional>
#include <optional>
#include <ostream>

namespace szego {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error("at position " + std::to_string(position) + ": " + message), position_(position) {}

namespace {

std::string join_terms(const std::vector<std::string>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        if (k > 0) out += " + ";
        out += terms[k];
    }
    return out;
}

std::vector<std::string> real_variable_names(std::size_t dim, bool pretty) {
    std::vector<std::string> names;
    if (pretty && dim <= 3) {
        const char* short_names[] = {"x", "y", "z"};
        for (std::size_t j = 0; j < dim; ++j) names.emplace_back(short_names[j]);
    } else {
        for (std::size_t j = 0; j < dim; ++j) names.push_back("x" + std::to_string(j + 1));
    }
    return names;
}

std::string pretty_factor(const std::string& name, Exponent e) {
    if (e == 1) return "*" + name;
    return "*" + name + "^" + std::to_string(e);
}

// ---------------------------------------------------------------------------
// Expression parser, generic over the target polynomial ring.

template <typename Poly>
class ExpressionParser {
public:
    using Resolver = std::function<std::optional<Poly>(std::string_view)>;
    using ConstantMaker = std::function<Poly(const GaussianRational&)>;
    using ConstantReader = std::function<std::optional<GaussianRational>(const Poly&)>;

    ExpressionParser(std::string_view text, Resolver resolve, ConstantMaker make_constant,
                     ConstantReader read_constant)
        : text_(text),
          resolve_(std::move(resolve)),
          make_constant_(std::move(make_constant)),
          read_constant_(std::move(read_constant)) {}

    Poly parse() {
        skip_space();
        if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
        Poly p = expression();
        skip_space();
        if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return p;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expression() {
        Poly acc = term_with_sign();
        while (true) {
            if (accept('+'))
                acc += term_with_sign();
            else if (accept('-'))
                acc -= term_with_sign();
            else
                return acc;
        }
    }

    Poly term_with_sign() {
        if (accept('-')) return -term_with_sign();
        if (accept('+')) return term_with_sign();
        return term();
    }

    Poly term() {
        Poly acc = factor();
        while (true) {
            if (accept('*')) {
                acc *= signed_factor();
            } else if (accept('/')) {
                skip_space();
                const std::size_t at = pos_;
                const auto c = read_constant_(signed_factor());
                if (!c) throw ParseError("division is only allowed by a constant", at);
                if (c->is_zero()) throw ParseError("division by zero", at);
                acc *= make_constant_(c->inverse());
            } else {
                return acc;
            }
        }
    }

    Poly signed_factor() {
        if (accept('-')) return -signed_factor();
        return factor();
    }

    Poly factor() {
        Poly base = primary();
        if (accept('^')) {
            skip_space();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) throw ParseError("expected a nonnegative integer exponent", start);
            const std::string digits(text_.substr(start, pos_ - start));
            if (digits.size() > 6) throw ParseError("exponent too large", start);
            return pow(base, static_cast<unsigned>(std::stoul(digits)));
        }
        return base;
    }

    Poly primary() {
        skip_space();
        if (pos_ == text_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly inner = expression();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return make_constant_(number());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            const std::string_view name = text_.substr(start, pos_ - start);
            if (name == "i") return make_constant_(GaussianRational::i());
            if (auto v = resolve_(name)) return *v;
            throw ParseError("unknown variable '" + std::string(name) + "'", start);
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    /// digits ['/' digits | '.' digits] ['i']
    GaussianRational number() {
        const std::size_t start = pos_;
        auto digits = [this] {
            const std::size_t s = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return text_.substr(s, pos_ - s);
        };
        const std::string_view whole = digits();
        Rational value;
        if (pos_ + 1 < text_.size() && text_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            ++pos_;
            const std::string_view den = digits();
            try {
                value = parse_rational(std::string(whole) + "/" + std::string(den));
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), start);
            }
        } else if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            const std::string_view frac = digits();
            if (whole.empty() && frac.empty()) throw ParseError("malformed number", start);
            Integer scale = 1;
            for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
            const Integer num = parse_decimal_integer(std::string(whole.empty() ? "0" : whole) + std::string(frac));
            value = Rational(num, scale);
        } else {
            value = Rational(parse_decimal_integer(whole));
        }
        if (pos_ < text_.size() && text_[pos_] == 'i' &&
            !(pos_ + 1 < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])) || text_[pos_ + 1] == '_'))) {
            ++pos_;
            return {Rational(0), value};
        }
        return {value, Rational(0)};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Resolver resolve_;
    ConstantMaker make_constant_;
    ConstantReader read_constant_;
};

GaussianRational coefficient_from_json(const nlohmann::json& term) {
    try {
        return {parse_rational(term.at("re").get<std::string>()), parse_rational(term.at("im").get<std::string>())};
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed polynomial term: ") + e.what());
    }
}

}  // namespace

std::string to_string(const PolyZZbar& p) {
    std::vector<std::string> terms;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        terms.push_back(to_string(it->second) + "*z^" + std::to_string(it->first.a) + "*zbar^" +
                        std::to_string(it->first.b));
    return join_terms(terms);
}

std::string to_pretty_string(const PolyZZbar& p) {
    std::vector<std::string> terms;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        std::string t = to_compact_string(it->second);
        if (it->first.a > 0) t += pretty_factor("z", it->first.a);
        if (it->first.b > 0) t += pretty_factor("zbar", it->first.b);
        terms.push_back(std::move(t));
    }
    return join_terms(terms);
}

std::string to_string(const PolyRealN& p) {
    const auto names = real_variable_names(p.dim(), false);
    std::vector<std::string> terms;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        std::string t = to_string(it->second);
        for (std::size_t j = 0; j < p.dim(); ++j) t += "*" + names[j] + "^" + std::to_string(it->first[j]);
        terms.push_back(std::move(t));
    }
    return join_terms(terms);
}

std::string to_pretty_string(const PolyRealN& p) {
    const auto names = real_variable_names(p.dim(), true);
    std::vector<std::string> terms;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        std::string t = to_compact_string(it->second);
        for (std::size_t j = 0; j < p.dim(); ++j)
            if (it->first[j] > 0) t += pretty_factor(names[j], it->first[j]);
        terms.push_back(std::move(t));
    }
    return join_terms(terms);
}

std::ostream& operator<<(std::ostream& os, const PolyZZbar& p) { return os << to_pretty_string(p); }
std::ostream& operator<<(std::ostream& os, const PolyRealN& p) { return os << to_pretty_string(p); }

PolyZZbar parse_zzbar(std::string_view text) {
    const GaussianRational half(Rational(1, 2));
    const GaussianRational half_i(Rational(0), Rational(1, 2));
    auto resolve = [&](std::string_view name) -> std::optional<PolyZZbar> {
        if (name == "z") return PolyZZbar::z();
        if (name == "zbar") return PolyZZbar::zbar();
        if (name == "x") return (PolyZZbar::z() + PolyZZbar::zbar()) * half;
        if (name == "y") return (PolyZZbar::z() - PolyZZbar::zbar()) * -half_i;
        return std::nullopt;
    };
    auto make = [](const GaussianRational& c) { return PolyZZbar::constant(c); };
    auto read = [](const PolyZZbar& p) -> std::optional<GaussianRational> {
        if (p.degree() > 0) return std::nullopt;
        return p.coeff(0, 0);
    };
    return ExpressionParser<PolyZZbar>(text, resolve, make, read).parse();
}

PolyRealN parse_real(std::string_view text, std::size_t dim) {
    if (dim == 0) throw std::invalid_argument("dimension must be positive");
    const auto short_names = real_variable_names(dim, true);
    auto resolve = [&](std::string_view name) -> std::optional<PolyRealN> {
        for (std::size_t j = 0; j < dim; ++j) {
            if (name == "x" + std::to_string(j + 1)) return PolyRealN::variable(dim, j);
            if (dim <= 3 && name == short_names[j]) return PolyRealN::variable(dim, j);
        }
        return std::nullopt;
    };
    auto make = [dim](const GaussianRational& c) { return PolyRealN::constant(dim, c); };
    auto read = [dim](const PolyRealN& p) -> std::optional<GaussianRational> {
        if (p.degree() > 0) return std::nullopt;
        return p.coeff(std::vector<Exponent>(dim, 0));
    };
    return ExpressionParser<PolyRealN>(text, resolve, make, read).parse();
}

nlohmann::json to_json(const PolyZZbar& p) {
    nlohmann::json out = nlohmann::json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        out.push_back({{"a", it->first.a},
                       {"b", it->first.b},
                       {"re", to_string(it->second.real())},
                       {"im", to_string(it->second.imag())}});
    return out;
}

PolyZZbar zzbar_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array of terms");
    PolyZZbar p;
    for (const auto& term : j) {
        if (!term.contains("a") || !term.contains("b") || !term["a"].is_number_unsigned() ||
            !term["b"].is_number_unsigned())
            throw std::invalid_argument("polynomial term needs nonnegative integer 'a' and 'b'");
        p.add_term({term["a"].get<Exponent>(), term["b"].get<Exponent>()}, coefficient_from_json(term));
    }
    return p;
}

nlohmann::json to_json(const PolyRealN& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        terms.push_back(
            {{"alpha", it->first}, {"re", to_string(it->second.real())}, {"im", to_string(it->second.imag())}});
    return {{"dim", p.dim()}, {"terms", terms}};
}

PolyRealN real_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("terms"))
        throw std::invalid_argument("real polynomial JSON needs 'dim' and 'terms'");
    const auto dim = j["dim"].get<std::size_t>();
    PolyRealN p(dim);
    for (const auto& term : j["terms"]) {
        const auto alpha = term.at("alpha").get<std::vector<Exponent>>();
        if (alpha.size() != dim) throw std::invalid_argument("multi-index length does not match 'dim'");
        p.add_term(alpha, coefficient_from_json(term));
    }
    return p;
}

}  // namespace szego
