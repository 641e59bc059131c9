#include "corpus.hpp"

#include "nearirr/gcd_resultant.hpp"
#include "nearirr/geometry.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <sys/wait.h>
#include <unistd.h>

namespace nearirr::testsupport {

namespace {

Rational randomCoeff(std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    int c = 0;
    while (c == 0) c = d(rng);
    return Rational(c);
}

Polynomial genericDraw(std::mt19937_64& rng, int max_deg, int max_terms,
                       int bound) {
    std::uniform_int_distribution<int> termCount(1, std::max(1, max_terms - 2));
    std::uniform_int_distribution<int> degPick(0, max_deg);
    Polynomial f;
    int t = termCount(rng);
    for (int i = 0; i < t; ++i) {
        std::int64_t a = degPick(rng);
        std::uniform_int_distribution<std::int64_t> betaPick(
            0, max_deg - static_cast<int>(a));
        std::int64_t b = betaPick(rng);
        f.add_term({a, b}, randomCoeff(rng, bound));
    }
    bool meets_alpha = false; // a term with beta == 0
    bool meets_beta = false;  // a term with alpha == 0
    for (const auto& pt : f.support()) {
        meets_alpha = meets_alpha || pt.beta == 0;
        meets_beta = meets_beta || pt.alpha == 0;
    }
    if (!meets_alpha) f.add_term({degPick(rng), 0}, randomCoeff(rng, bound));
    if (!meets_beta) f.add_term({0, degPick(rng)}, randomCoeff(rng, bound));
    return f;
}

Polynomial segmentDraw(std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<std::int64_t> dirPick(0, 3);
    std::int64_t a = 0;
    std::int64_t b = 0;
    while (a == 0 && b == 0) {
        a = dirPick(rng);
        b = dirPick(rng);
    }
    std::int64_t g = std::gcd(a, b);
    a /= g;
    b /= g;
    std::uniform_int_distribution<int> lenPick(1, 3);
    int len = lenPick(rng);
    Polynomial f;
    for (int k = 0; k <= len; ++k)
        f.add_term({k * a, k * b}, randomCoeff(rng, bound));
    return f;
}

Polynomial axisDraw(std::mt19937_64& rng, int max_deg, int bound) {
    std::uniform_int_distribution<int> termCount(1, 3);
    std::uniform_int_distribution<std::int64_t> degPick(0, max_deg);
    Polynomial f;
    int tx = termCount(rng);
    for (int i = 0; i < tx; ++i) f.add_term({degPick(rng), 0}, randomCoeff(rng, bound));
    int ty = termCount(rng);
    for (int i = 0; i < ty; ++i) f.add_term({0, degPick(rng)}, randomCoeff(rng, bound));
    return f;
}

} // namespace

Polynomial random_quasi_convenient(std::mt19937_64& rng, int max_deg,
                                   int max_terms, int coeff_bound) {
    std::uniform_int_distribution<int> shapePick(0, 19);
    for (;;) {
        int shape = shapePick(rng);
        Polynomial f;
        if (shape < 15)
            f = genericDraw(rng, max_deg, max_terms, coeff_bound);
        else if (shape < 18)
            f = segmentDraw(rng, coeff_bound);
        else
            f = axisDraw(rng, max_deg, coeff_bound);
        if (f.is_zero() || f.is_constant()) continue;
        if (!is_quasi_convenient(f)) continue;
        return f;
    }
}

std::vector<Polynomial> corpus(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Polynomial> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(random_quasi_convenient(rng));
    return out;
}

std::pair<Polynomial, Polynomial> random_coprime_pair(std::mt19937_64& rng,
                                                      int max_deg) {
    for (;;) {
        Polynomial g = random_quasi_convenient(rng, max_deg, 5, 4);
        Polynomial h = random_quasi_convenient(rng, max_deg, 5, 4);
        if (bivar_gcd(g, h).is_constant()) return {g, h};
    }
}

Rational det_rational(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::logic_error("nonsquare matrix");
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == 0) continue;
            Rational factor = m[row][col] / m[col][col];
            for (std::size_t k = col; k < n; ++k)
                m[row][k] -= factor * m[col][k];
        }
    }
    return det;
}

namespace {

// Res of two univariate polynomials given by ascending coefficient lists,
// as the Sylvester determinant. Leading coefficients must be nonzero.
Rational sylvesterDet(const std::vector<Rational>& a,
                      const std::vector<Rational>& b) {
    const std::size_t m = a.size() - 1;
    const std::size_t n = b.size() - 1;
    const std::size_t size = m + n;
    std::vector<std::vector<Rational>> mat(size,
                                           std::vector<Rational>(size, Rational(0)));
    for (std::size_t row = 0; row < n; ++row)
        for (std::size_t k = 0; k <= m; ++k) mat[row][row + k] = a[m - k];
    for (std::size_t row = 0; row < m; ++row)
        for (std::size_t k = 0; k <= n; ++k) mat[n + row][row + k] = b[n - k];
    return det_rational(std::move(mat));
}

std::vector<Rational> specializeAtX(const std::vector<UnivariatePoly>& ycoeffs,
                                    const Rational& x0) {
    std::vector<Rational> out;
    out.reserve(ycoeffs.size());
    for (const auto& c : ycoeffs) out.push_back(c.evaluate(x0));
    return out;
}

} // namespace

UnivariatePoly sylvester_resultant(const Polynomial& f, const Polynomial& g) {
    if (f.degree_in(Var::Y) < 1 || g.degree_in(Var::Y) < 1)
        throw std::logic_error("sylvester_resultant needs positive Y-degree");
    const auto fc = f.y_coefficients();
    const auto gc = g.y_coefficients();
    const UnivariatePoly& flead = fc.back();
    const UnivariatePoly& glead = gc.back();
    const std::int64_t bound = f.degree_in(Var::X) * g.degree_in(Var::Y) +
                               g.degree_in(Var::X) * f.degree_in(Var::Y);
    std::vector<Rational> nodes;
    std::vector<Rational> values;
    for (std::int64_t k = 0; std::int64_t(nodes.size()) <= bound; ++k) {
        Rational x0(k);
        if (flead.evaluate(x0) == 0 || glead.evaluate(x0) == 0) continue;
        nodes.push_back(x0);
        values.push_back(sylvesterDet(specializeAtX(fc, x0), specializeAtX(gc, x0)));
    }
    UnivariatePoly acc;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (values[i] == 0) continue;
        UnivariatePoly basis(std::vector<Rational>{Rational(1)});
        Rational denom(1);
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            if (j == i) continue;
            basis = basis * UnivariatePoly(std::vector<Rational>{-nodes[j], Rational(1)});
            denom *= nodes[i] - nodes[j];
        }
        acc = acc + basis * UnivariatePoly(std::vector<Rational>{values[i] / denom});
    }
    return acc;
}

std::vector<LatticePoint> giftwrap_hull(std::vector<LatticePoint> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() <= 2) return points;
    std::vector<LatticePoint> hull;
    LatticePoint current = points.front(); // lexicographic minimum is extreme
    do {
        hull.push_back(current);
        LatticePoint next = points[0] == current ? points[1] : points[0];
        for (const auto& p : points) {
            if (p == current) continue;
            std::int64_t c = cross(current, next, p);
            auto farther = [&](const LatticePoint& u, const LatticePoint& v) {
                std::int64_t du = (u.alpha - current.alpha) * (u.alpha - current.alpha) +
                                  (u.beta - current.beta) * (u.beta - current.beta);
                std::int64_t dv = (v.alpha - current.alpha) * (v.alpha - current.alpha) +
                                  (v.beta - current.beta) * (v.beta - current.beta);
                return du > dv;
            };
            if (c < 0 || (c == 0 && farther(p, next))) next = p;
        }
        current = next;
    } while (!(current == hull.front()));
    return hull;
}

std::int64_t fan_doubled_area(const std::vector<LatticePoint>& ccw_vertices) {
    if (ccw_vertices.size() < 3) return 0;
    std::int64_t total = 0;
    for (std::size_t i = 1; i + 1 < ccw_vertices.size(); ++i)
        total += cross(ccw_vertices[0], ccw_vertices[i], ccw_vertices[i + 1]);
    return total;
}

namespace {

std::string shellQuote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'')
            out += "'\\''";
        else
            out += c;
    }
    out += "'";
    return out;
}

std::string readWholeFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
}

} // namespace

CmdResult run_cli(const std::vector<std::string>& args,
                  const std::string& stdin_data) {
    static std::atomic<int> counter{0};
    const std::string stem = "/tmp/nearirr_test_" + std::to_string(getpid()) +
                             "_" + std::to_string(counter++);
    const std::string errPath = stem + ".err";
    const std::string inPath = stem + ".in";

    std::string cmd = shellQuote(NEARIRR_BIN);
    for (const auto& a : args) cmd += " " + shellQuote(a);
    {
        std::ofstream in(inPath, std::ios::binary);
        in << stdin_data;
    }
    cmd += " < " + shellQuote(inPath) + " 2> " + shellQuote(errPath);

    CmdResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        result.out.append(buf, got);
    int status = pclose(pipe);
    if (status >= 0 && WIFEXITED(status))
        result.exit_code = WEXITSTATUS(status);
    result.err = readWholeFile(errPath);
    std::remove(errPath.c_str());
    std::remove(inPath.c_str());
    return result;
}

} // namespace nearirr::testsupport
