#include "leeyang/exact.hpp"

#include <cmath>
#include <regex>
#include <sstream>

#include <mpfr.h>

namespace leeyang {

namespace {

Rational pow2(long e)
{
    Rational r = 1;
    Integer p = Integer(1) << static_cast<unsigned>(e < 0 ? -e : e);
    return e < 0 ? Rational(r / Rational(p)) : Rational(p);
}

Rational pow10(long e)
{
    Integer p = 1;
    for (long i = 0; i < (e < 0 ? -e : e); ++i) p *= 10;
    return e < 0 ? Rational(Rational(1) / Rational(p)) : Rational(p);
}

class Mpfr {
public:
    explicit Mpfr(int bits) { mpfr_init2(v_, bits); }
    ~Mpfr() { mpfr_clear(v_); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
    mpfr_ptr get() { return v_; }

    /// Exact rational value plus a radius of one unit in the last place.
    Enclosure enclosure(int bits)
    {
        Integer z;
        const mpfr_exp_t e = mpfr_get_z_2exp(z.backend().data(), v_);
        Rational mid = Rational(z) * pow2(e);
        Rational rad = pow2(static_cast<long>(mpfr_get_exp(v_)) - bits);
        return {std::move(mid), std::move(rad)};
    }

private:
    mpfr_t v_;
};

const std::regex kSqrt(R"(sqrt\(?(\d+)\)?)");
const std::regex kLog(R"(log\(?(\d+)\)?)");

Enclosure builtin_enclosure(const std::string& label, int bits)
{
    Mpfr v(bits);
    std::smatch m;
    if (label == "pi") {
        mpfr_const_pi(v.get(), MPFR_RNDN);
    } else if (label == "e") {
        mpfr_set_ui(v.get(), 1, MPFR_RNDN);
        mpfr_exp(v.get(), v.get(), MPFR_RNDN);
    } else if (std::regex_match(label, m, kSqrt)) {
        mpfr_sqrt_ui(v.get(), std::stoul(m[1]), MPFR_RNDN);
    } else if (std::regex_match(label, m, kLog)) {
        mpfr_log_ui(v.get(), std::stoul(m[1]), MPFR_RNDN);
    } else {
        throw std::invalid_argument("unknown builtin constant '" + label + "'");
    }
    return v.enclosure(bits);
}

/// A decimal literal is accurate to one unit in its last written digit.
Enclosure decimal_enclosure(const std::string& s)
{
    static const std::regex dec(R"(\s*[+-]?(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*)");
    std::smatch m;
    if (s.find('/') != std::string::npos || !std::regex_match(s, m, dec))
        throw std::invalid_argument("approximation must be a decimal string: '" + s + "'");
    const long frac_digits = m[2].matched ? static_cast<long>(m[2].length()) : 0;
    const long exponent = m[3].matched ? std::stol(m[3]) : 0;
    return {parse_rational(s), pow10(exponent - frac_digits)};
}

}  // namespace

// ---------------------------------------------------------------------------

bool BasisContext::is_builtin(const std::string& label)
{
    return label == "pi" || label == "e" || std::regex_match(label, kSqrt) ||
           std::regex_match(label, kLog);
}

BasisContext::BasisContext(std::vector<Entry> entries, int precision_bits, int max_precision_bits)
    : precision_bits_(precision_bits), max_precision_bits_(max_precision_bits)
{
    if (precision_bits <= 0 || max_precision_bits < precision_bits)
        throw std::invalid_argument("invalid precision configuration");

    entries_.push_back({"1", "1"});
    for (auto& e : entries) {
        if (e.label == "1") {
            if (!e.approximation.empty() && parse_rational(e.approximation) != 1)
                throw std::invalid_argument("the approximation of label '1' must be 1");
            continue;
        }
        if (e.label.empty()) throw std::invalid_argument("empty basis label");
        for (const auto& seen : entries_)
            if (seen.label == e.label)
                throw std::invalid_argument("duplicate basis label '" + e.label + "'");
        if (e.approximation.empty() && !is_builtin(e.label))
            throw std::invalid_argument("basis label '" + e.label +
                                        "' needs an approximation (not a known constant)");
        if (!e.approximation.empty() && is_builtin(e.label)) {
            // The builtin value wins, but a supplied decimal must agree with it.
            const Enclosure given = decimal_enclosure(e.approximation);
            const Enclosure exact = builtin_enclosure(e.label, precision_bits);
            if (abs(given.mid - exact.mid) > given.rad + exact.rad)
                throw std::invalid_argument("approximation for '" + e.label +
                                            "' disagrees with its known value");
            e.approximation.clear();
        }
        if (!e.approximation.empty()) decimal_enclosure(e.approximation);
        entries_.push_back(std::move(e));
    }
}

std::shared_ptr<const BasisContext> BasisContext::make(std::vector<Entry> entries, int precision_bits,
                                                       int max_precision_bits)
{
    return std::make_shared<const BasisContext>(std::move(entries), precision_bits,
                                                max_precision_bits);
}

std::shared_ptr<const BasisContext> BasisContext::rationals_and(const std::vector<std::string>& labels)
{
    std::vector<Entry> entries;
    for (const auto& l : labels) entries.push_back({l, ""});
    return make(std::move(entries));
}

std::optional<std::size_t> BasisContext::index_of(const std::string& label) const
{
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i].label == label) return i;
    return std::nullopt;
}

bool BasisContext::same_basis(const BasisContext& other) const
{
    if (this == &other) return true;
    if (entries_.size() != other.entries_.size()) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i].label != other.entries_[i].label ||
            entries_[i].approximation != other.entries_[i].approximation)
            return false;
    return true;
}

const std::vector<Enclosure>& BasisContext::enclosures(int bits) const
{
    bits = std::max(bits, precision_bits_);
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(bits);
    if (it != cache_.end()) return it->second;

    std::vector<Enclosure> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) {
        if (e.label == "1")
            out.push_back({1, 0});
        else if (e.approximation.empty())
            out.push_back(builtin_enclosure(e.label, bits));
        else
            out.push_back(decimal_enclosure(e.approximation));
    }
    return cache_.emplace(bits, std::move(out)).first->second;
}

// ---------------------------------------------------------------------------

ExactReal::ExactReal(ContextPtr ctx, RationalVector coords) : ctx_(std::move(ctx)), coords_(std::move(coords))
{
    if (!ctx_) throw std::invalid_argument("ExactReal needs a basis context");
    if (static_cast<std::size_t>(coords_.size()) != ctx_->size())
        throw DimensionMismatch("coordinate count does not match basis size");
}

ExactReal ExactReal::zero(ContextPtr ctx)
{
    RationalVector c = RationalVector::Zero(static_cast<Eigen::Index>(ctx->size()));
    return ExactReal(std::move(ctx), std::move(c));
}

ExactReal ExactReal::rational(ContextPtr ctx, const Rational& q)
{
    ExactReal x = zero(std::move(ctx));
    x.coords_(0) = q;
    return x;
}

ExactReal ExactReal::basis(ContextPtr ctx, const std::string& label)
{
    const auto idx = ctx->index_of(label);
    if (!idx) throw std::invalid_argument("unknown basis label '" + label + "'");
    ExactReal x = zero(std::move(ctx));
    x.coords_(static_cast<Eigen::Index>(*idx)) = 1;
    return x;
}

bool ExactReal::is_zero() const
{
    for (Eigen::Index i = 0; i < coords_.size(); ++i)
        if (coords_(i) != 0) return false;
    return true;
}

bool ExactReal::is_rational() const
{
    for (Eigen::Index i = 1; i < coords_.size(); ++i)
        if (coords_(i) != 0) return false;
    return true;
}

void ExactReal::check_same(const ExactReal& o) const
{
    if (!ctx_ || !o.ctx_ || !ctx_->same_basis(*o.ctx_))
        throw DimensionMismatch("exact reals over different bases");
}

ExactReal ExactReal::operator+(const ExactReal& o) const
{
    check_same(o);
    return ExactReal(ctx_, coords_ + o.coords_);
}

ExactReal ExactReal::operator-(const ExactReal& o) const
{
    check_same(o);
    return ExactReal(ctx_, coords_ - o.coords_);
}

ExactReal ExactReal::operator-() const { return ExactReal(ctx_, -coords_); }

ExactReal ExactReal::operator*(const Rational& s) const { return ExactReal(ctx_, coords_ * s); }

ExactReal& ExactReal::operator+=(const ExactReal& o)
{
    check_same(o);
    coords_ += o.coords_;
    return *this;
}

bool ExactReal::operator==(const ExactReal& o) const
{
    check_same(o);
    return coords_ == o.coords_;
}

std::string ExactReal::str() const
{
    std::ostringstream os;
    bool first = true;
    for (Eigen::Index i = 0; i < coords_.size(); ++i) {
        const Rational& c = coords_(i);
        if (c == 0) continue;
        const std::string& label = ctx_->label(static_cast<std::size_t>(i));
        Rational mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (i == 0)
            os << mag.str();
        else if (mag == 1)
            os << label;
        else
            os << mag.str() << "*" << label;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

// ---------------------------------------------------------------------------

namespace {

Enclosure evaluate(const ExactReal& x, int bits)
{
    const auto& enc = x.context()->enclosures(bits);
    Enclosure out{0, 0};
    const auto& c = x.coords();
    for (Eigen::Index i = 0; i < c.size(); ++i) {
        if (c(i) == 0) continue;
        out.mid += c(i) * enc[static_cast<std::size_t>(i)].mid;
        out.rad += abs(c(i)) * enc[static_cast<std::size_t>(i)].rad;
    }
    return out;
}

}  // namespace

Sign sign_of(const ExactReal& x)
{
    if (x.is_zero()) return Sign::Zero;
    const auto& ctx = *x.context();
    for (int bits = ctx.precision_bits(); bits <= ctx.max_precision_bits(); bits *= 2) {
        const Enclosure e = evaluate(x, bits);
        if (abs(e.mid) > e.rad) return e.mid > 0 ? Sign::Positive : Sign::Negative;
    }
    throw PrecisionExhausted("cannot decide the sign of " + x.str() + " at " +
                             std::to_string(ctx.max_precision_bits()) +
                             " bits; the declared basis may be Q-dependent");
}

Sign compare(const ExactReal& a, const ExactReal& b) { return sign_of(a - b); }

BigFloat to_float(const ExactReal& x, int bits)
{
    const unsigned digits10 = static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
    if (x.is_zero()) return BigFloat(0, digits10);
    const auto& ctx = *x.context();
    const int ceiling = std::max(ctx.max_precision_bits(), 4 * bits);
    Enclosure e;
    for (int p = std::max(ctx.precision_bits(), bits + 32); p <= ceiling; p *= 2) {
        e = evaluate(x, p);
        if (e.rad * pow2(bits + 1) <= abs(e.mid)) break;
    }
    return BigFloat(e.mid, digits10);
}

double to_double(const ExactReal& x)
{
    if (x.is_zero()) return 0.0;
    return to_float(x, 64).convert_to<double>();
}

ExactReal dot(const IntVector& v, const std::vector<ExactReal>& x)
{
    if (static_cast<std::size_t>(v.size()) != x.size() || x.empty())
        throw DimensionMismatch("dot: length mismatch");
    ExactReal out = ExactReal::zero(x.front().context());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const auto vi = v(static_cast<Eigen::Index>(i));
        if (vi != 0) out += x[i] * Rational(vi);
    }
    return out;
}

std::vector<double> to_doubles(const std::vector<ExactReal>& x)
{
    std::vector<double> out;
    out.reserve(x.size());
    for (const auto& v : x) out.push_back(to_double(v));
    return out;
}

// ---------------------------------------------------------------------------

std::string GaussianRational::str() const
{
    if (im == 0) return re.str();
    std::string s = re == 0 ? std::string() : re.str() + (im < 0 ? " - " : " + ");
    if (re == 0 && im < 0) s = "-";
    const Rational m = abs(im);
    return s + (m == 1 ? std::string() : m.str() + "*") + "i";
}

namespace {

std::string strip_zeros(std::string s)
{
    const std::size_t sign = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
    const std::size_t first = s.find_first_not_of('0', sign);
    if (first == std::string::npos) return "0";
    if (sign && s[0] == '+') return s.substr(first);
    return s.substr(0, sign) + s.substr(first);
}

}  // namespace

Rational parse_rational(const std::string& raw)
{
    static const std::regex frac(R"(\s*([+-]?\d+)\s*/\s*([+-]?\d+)\s*)");
    static const std::regex dec(R"(\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*)");
    std::smatch m;
    if (std::regex_match(raw, m, frac)) {
        Integer num(strip_zeros(m[1].str()));
        Integer den(strip_zeros(m[2].str()));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + raw + "'");
        return Rational(num) / Rational(den);
    }
    if (std::regex_match(raw, m, dec) && (m[2].length() > 0 || m[3].length() > 0)) {
        // Leading zeros would make GMP read the digits as octal.
        std::string digits = m[2].str() + m[3].str();
        digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size()));
        Rational v = Rational(Integer(digits.empty() ? std::string("0") : digits));
        const long exponent = (m[4].matched ? std::stol(m[4]) : 0) - static_cast<long>(m[3].length());
        v *= pow10(exponent);
        return m[1] == "-" ? Rational(-v) : v;
    }
    throw std::invalid_argument("cannot parse rational '" + raw + "'");
}

Rational rational_from_double(double v)
{
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite value");
    if (v == 0.0) return 0;
    int e = 0;
    const double m = std::frexp(v, &e);
    const auto mant = static_cast<std::int64_t>(std::ldexp(m, 53));
    return Rational(mant) * pow2(e - 53);
}

}  // namespace leeyang
