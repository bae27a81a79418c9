#include "efm/recovery.hpp"

#include <algorithm>
#include <map>

namespace efm {

namespace {

std::int64_t half_kappa_twice(int kappa2) { return std::abs(kappa2); }

bool is_boundary(HalfInt z, int kappa2) { return std::abs(z.twice) == half_kappa_twice(kappa2); }

[[noreturn]] void case_failed(const std::string& what) { throw Error(ErrorKind::CaseValidationFailed, what); }

} // namespace

bool is_fixed(const Weight& zeta, int i, int kappa2)
{
    const int n = static_cast<int>(zeta.size());
    if (i < 1 || i > n)
        throw Error(ErrorKind::InvalidInput, "coordinate index out of range");
    // reach[k]: a unit-step chain from k ends at +-kappa2/2. Filled right to left.
    std::vector<char> reach(static_cast<std::size_t>(n), 0);
    for (int k = n; k >= i; --k) {
        auto zk = zeta[static_cast<std::size_t>(k - 1)];
        bool ok = is_boundary(zk, kappa2);
        for (int l = k + 1; l <= n && !ok; ++l)
            ok = reach[static_cast<std::size_t>(l - 1)] && std::abs((zk - zeta[static_cast<std::size_t>(l - 1)]).twice) == 2;
        reach[static_cast<std::size_t>(k - 1)] = ok;
    }
    return reach[static_cast<std::size_t>(i - 1)];
}

bool is_minimal(const Weight& zeta, int kappa2)
{
    for (std::size_t i = 0; i < zeta.size(); ++i)
        if (zeta[i].twice > 0 && !is_fixed(zeta, static_cast<int>(i + 1), kappa2))
            return false;
    return true;
}

std::vector<int> corners_of(const Weight& zeta)
{
    std::vector<int> out;
    for (std::size_t i = 0; i < zeta.size(); ++i) {
        bool corner = true;
        for (std::size_t k = i + 1; k < zeta.size() && corner; ++k)
            corner = std::abs((zeta[k] - zeta[i]).twice) != 2;
        if (corner)
            out.push_back(static_cast<int>(i + 1));
    }
    return out;
}

namespace {

std::optional<PropertyViolation> first_violation(const Weight& z, int kappa2)
{
    const std::size_t n = z.size();
    auto v = [](std::string prop, std::string detail) {
        return PropertyViolation{0, std::move(prop), std::move(detail)};
    };
    for (std::size_t i = 0; i < n; ++i)
        if (((z[i].twice - kappa2) % 2 + 2) % 2 != 0)
            return v("parity", "zeta_" + std::to_string(i + 1) + "=" + to_string(z[i]) + " has the wrong parity for kappa2=" + std::to_string(kappa2));
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (z[i] == z[i + 1])
            return v("adjacent-equal", "zeta_" + std::to_string(i + 1) + " = zeta_" + std::to_string(i + 2));
    if (kappa2 != 0 && n > 0 && z.back().twice == 0)
        return v("zeta_n=0", "last coordinate is 0 with kappa2 != 0");
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(z[i].twice) <= half_kappa_twice(kappa2) && !is_fixed(z, static_cast<int>(i + 1), kappa2))
            return v("property-1", "coordinate " + to_string(z[i]) + " at " + std::to_string(i + 1) + " is not fixed");
    for (std::size_t i = 0; i < n; ++i) {
        // Nearest later repeat is enough: the condition for farther pairs follows.
        std::size_t j = i + 1;
        while (j < n && z[j] != z[i])
            ++j;
        if (j == n)
            continue;
        bool up = false, down = false;
        for (std::size_t k = i + 1; k < j; ++k) {
            up = up || z[k] == z[i] + 1;
            down = down || z[k] == z[i] - 1;
        }
        if (!up || !down)
            return v("repeat-neighbours", "zeta_" + std::to_string(i + 1) + " = zeta_" + std::to_string(j + 1) + " without both neighbours in between");
    }
    if (kappa2 != 0 && is_minimal(z, kappa2)) {
        int k = 0, r = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (z[i].twice == half_kappa_twice(kappa2))
                k = static_cast<int>(i + 1);
            if (z[i].twice == -half_kappa_twice(kappa2))
                r = static_cast<int>(i + 1);
        }
        if (k && r) {
            auto c = corners_of(z);
            bool kc = std::find(c.begin(), c.end(), k) != c.end();
            bool rc = std::find(c.begin(), c.end(), r) != c.end();
            if (kc && rc)
                return v("property-3", "rightmost +-kappa2/2 coordinates " + std::to_string(k) + " and " + std::to_string(r) + " are both corners");
        }
    }
    return std::nullopt;
}

} // namespace

PropertyReport check_properties(const std::vector<Weight>& weights, int kappa2)
{
    PropertyReport rep;
    for (std::size_t w = 0; w < weights.size(); ++w)
        if (auto v = first_violation(weights[w], kappa2)) {
            v->weight_index = w;
            rep.violations.push_back(*v);
        }
    return rep;
}

Minimalization minimalize(const Weight& zeta, int kappa2)
{
    const int n = static_cast<int>(zeta.size());
    const std::int64_t h2 = half_kappa_twice(kappa2);
    std::vector<int> rs;
    for (int i = 1; i <= n; ++i)
        if (zeta[static_cast<std::size_t>(i - 1)].twice > h2 && !is_fixed(zeta, i, kappa2))
            rs.push_back(i);

    Minimalization out{zeta, {}};
    Weight& w = out.result;
    // Letters in the order they act; reversed into product order at the end.
    Word acting;
    auto apply_s = [&](int i) {
        auto& x = w[static_cast<std::size_t>(i - 1)];
        auto& y = w[static_cast<std::size_t>(i)];
        if (std::abs((x - y).twice) == 2)
            throw Error(ErrorKind::NotMinimalizable, "s" + std::to_string(i) + " blocked at " + to_string(w));
        std::swap(x, y);
        acting.push_back(i);
    };
    auto apply_gamma = [&]() {
        auto& x = w.back();
        if (std::abs(x.twice) == h2)
            throw Error(ErrorKind::NotMinimalizable, "gamma blocked at " + to_string(w));
        x = -x;
        acting.push_back(n);
    };

    const int l = static_cast<int>(rs.size());
    for (int m = 0; m < l; ++m) {
        const int r = rs[static_cast<std::size_t>(l - 1 - m)];
        for (int i = r; i < n - m; ++i)
            apply_s(i);
    }
    // gamma_n (s_{n-1} gamma_n) ... (s_{n-l+1} ... s_{n-1} gamma_n): the last group acts first.
    for (int g = l - 1; g >= 0; --g) {
        apply_gamma();
        for (int i = n - 1; i >= n - g; --i)
            apply_s(i);
    }
    out.word.assign(acting.rbegin(), acting.rend());
    if (!is_minimal(w, kappa2))
        throw Error(ErrorKind::NotMinimalizable, "result " + to_string(w) + " is not minimal");
    return out;
}

namespace {

struct CaseOutput {
    std::pair<int, int> rect1, rect2;  // (width, height)
    std::vector<int> xi;
};

} // namespace

Recovery recover(const Weight& zeta, int kappa2)
{
    if (zeta.empty())
        throw Error(ErrorKind::InvalidInput, "empty weight");
    if (auto v = first_violation(zeta, kappa2))
        throw Error(ErrorKind::PropertyViolation, v->property + ": " + v->detail);
    if (!is_minimal(zeta, kappa2))
        throw Error(ErrorKind::NotMinimal, to_string(zeta) + " has an unfixed positive coordinate");

    Recovery res;
    RecoveryTrace& tr = res.trace;
    try {
        tr.recon = reconstruct_tableau(zeta, kappa2);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::NotReconstructible)
            case_failed(e.what());
        throw;
    }
    const auto& T = tr.recon.tableau;
    const Partition& nu = tr.recon.shape.outer;
    const Partition& beta = tr.recon.shape.inner;
    const int ell = static_cast<int>(nu.length());
    const int nu1 = nu[1];
    const std::int64_t h2 = half_kappa_twice(kappa2);
    const HalfInt h = HalfInt::from_twice(h2);

    // Corners sorted by row, bottom first; one corner per row.
    std::vector<int> cs = corners_of(zeta);
    std::sort(cs.begin(), cs.end(), [&](int x, int y) { return T.at(x).row > T.at(y).row; });
    for (std::size_t k = 1; k < cs.size(); ++k)
        if (T.at(cs[k]).row == T.at(cs[k - 1]).row)
            throw Error(ErrorKind::Internal, "two corners in one row");
    tr.r1 = cs.at(0);
    tr.r2 = cs.size() > 1 ? cs[1] : 0;
    const HalfInt z1 = zeta[static_cast<std::size_t>(tr.r1 - 1)];
    const auto as_int = [](HalfInt x) {
        if (!x.is_integer())
            throw Error(ErrorKind::Internal, "expected an integer, got " + to_string(x));
        return static_cast<int>(x.twice / 2);
    };

    CaseOutput co;
    const bool top = z1.twice == h2;
    const bool bottom = z1.twice == -h2;
    if ((top || bottom) && tr.r2) {
        const HalfInt z2 = zeta[static_cast<std::size_t>(tr.r2 - 1)];
        if (z2.twice == -h2 && top)
            throw Error(ErrorKind::PropertyViolation, "property-3: both +-kappa2/2 corners present");
        if (z2.twice >= -h2)
            case_failed("second corner " + to_string(z2) + " is not below -|kappa2|/2");
        tr.case_label = top ? "1" : "2";
        Cell c1 = T.at(tr.r1);
        tr.i1 = c1.row;
        tr.j1 = c1.col;
        tr.i2 = T.at(tr.r2).row;
        tr.j2 = as_int((top ? tr.recon.s + h : tr.recon.s - h) + tr.i2);
        if (nu[static_cast<std::size_t>(tr.i2)] - tr.j1 - tr.j2 < 0)
            case_failed("nu_i2 - j1 - j2 < 0");
        co.rect1 = {nu1 - tr.j1, tr.i2};
        co.rect2 = {nu1 - tr.j2, tr.i1};
        for (int k = 1; k <= tr.i1; ++k)
            co.xi.push_back(beta[static_cast<std::size_t>(k)] + nu1 - tr.j1 - tr.j2);
        for (int k = 1; k <= tr.i2; ++k)
            co.xi.push_back(nu1 - nu[static_cast<std::size_t>(tr.i2 - k + 1)]);
    } else if (top || bottom) {
        const int j = as_int(top ? tr.recon.s + h : tr.recon.s - h);
        tr.j1 = j;
        tr.i1 = T.at(tr.r1).row;
        if (j >= 1) {
            tr.case_label = top ? "3a" : "4a";
            co.rect1 = {j, 1};
            co.rect2 = {nu1, ell + 1};
            co.xi.push_back(nu1 + j);
            for (int k = 2; k <= ell + 1; ++k)
                co.xi.push_back(beta[static_cast<std::size_t>(k - 1)]);
        } else {
            tr.case_label = top ? "3b" : "4b";
            co.rect1 = {1, 1};
            co.rect2 = {nu1 - j + 1, ell + 1};
            co.xi.push_back(nu1 - j + 2);
            for (int k = 2; k <= ell + 1; ++k)
                co.xi.push_back(beta[static_cast<std::size_t>(k - 1)] - j + 1);
        }
    } else if (z1.twice < -h2) {
        tr.case_label = "5";
        tr.i1 = T.at(tr.r1).row;
        const int nul = nu[static_cast<std::size_t>(ell)];
        tr.j1 = as_int(z1 + h + nul);
        tr.j2 = as_int(z1 - h + nul);
        if (nul - tr.j1 - tr.j2 < 0)
            case_failed("nu_l - j1 - j2 < 0");
        co.rect1 = {nu1 - tr.j1, ell};
        co.rect2 = {nu1 - tr.j2, ell};
        for (int k = 1; k <= ell; ++k)
            co.xi.push_back(beta[static_cast<std::size_t>(k)] + nu1 - tr.j1 - tr.j2);
        for (int k = 1; k <= ell; ++k)
            co.xi.push_back(nu1 - nu[static_cast<std::size_t>(ell - k + 1)]);
    } else {
        case_failed("lowest corner value " + to_string(z1) + " fits no case");
    }
    tr.rect1 = co.rect1;
    tr.rect2 = co.rect2;

    const int N = co.rect1.second + co.rect2.second;
    if (static_cast<int>(co.xi.size()) > N)
        case_failed("xi has more than N parts");
    for (std::size_t k = 0; k < co.xi.size(); ++k)
        if (co.xi[k] < 0 || (k > 0 && co.xi[k] > co.xi[k - 1]))
            case_failed("xi " + to_string(Partition(co.xi)) + " is not a partition");
    if (co.rect1.first < 0 || co.rect2.first < 0)
        case_failed("negative rectangle width");

    // Orient so that p - q - a + b = kappa2.
    auto [w1, h1] = co.rect1;
    auto [w2, hh2] = co.rect2;
    RecoveredParams& rp = res.params;
    if (h1 - hh2 - w1 + w2 == kappa2) {
        rp.a = w1, rp.p = h1, rp.b = w2, rp.q = hh2;
    } else if (hh2 - h1 - w2 + w1 == kappa2) {
        rp.a = w2, rp.p = hh2, rp.b = w1, rp.q = h1;
        tr.swapped = true;
    } else {
        case_failed("rectangles do not reproduce kappa2");
    }
    rp.N = N;
    rp.xi = Partition(co.xi).padded(static_cast<std::size_t>(N));
    rp.mu = ratio(rp.a - rp.b, N);
    const int n = static_cast<int>(zeta.size());
    if (rp.xi.size() + n != rp.p * rp.a + rp.q * rp.b)
        case_failed("|xi| + n != pa + qb");
    return res;
}

namespace {

EfmParameters buildable(const RecoveredParams& rp, int n)
{
    return rp.p > rp.q ? make_parameters(n, rp.q, rp.p, rp.b, rp.a, rp.xi)
                       : make_parameters(n, rp.p, rp.q, rp.a, rp.b, rp.xi);
}

} // namespace

HeckeModule build_recovered_module(const RecoveredParams& rp, int n, std::vector<Weight>* weights)
{
    SeminormalModule m = build_efm_module(buildable(rp, n));
    if (weights)
        *weights = m.weights;
    return rp.p > rp.q ? twist_gamma(m.ops) : m.ops;
}

std::vector<Weight> recovered_weights(const RecoveredParams& rp, int n)
{
    // Swapping the blocks keeps the y action, so the weights need no twist.
    EfmParameters params = buildable(rp, n);
    std::vector<Weight> out;
    for (const auto& t : tab_family(params))
        out.push_back(weight_of(t, params));
    return out;
}

bool roundtrip_check(const Weight& zeta, int kappa2)
{
    Recovery r = recover(zeta, kappa2);
    const auto& rp = r.params;
    if (rp.p - rp.q - rp.a + rp.b != kappa2)
        throw Error(ErrorKind::RoundTripFailed, "kappa2 mismatch");
    std::vector<Weight> ws;
    try {
        ws = recovered_weights(rp, static_cast<int>(zeta.size()));
    } catch (const Error& e) {
        throw Error(ErrorKind::RoundTripFailed, std::string("rebuild failed: ") + e.what());
    }
    if (std::find(ws.begin(), ws.end(), zeta) == ws.end())
        throw Error(ErrorKind::RoundTripFailed, to_string(zeta) + " is not a weight of the rebuilt module");
    if (!is_minimal(zeta, kappa2))
        throw Error(ErrorKind::RoundTripFailed, "weight is not minimal in the rebuilt module");
    return true;
}

} // namespace efm
