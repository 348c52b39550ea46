#include "l1bar/fill.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "l1bar/cochain.hpp"
#include "l1bar/linalg.hpp"

namespace l1bar {

namespace {

std::size_t tuple_count(std::size_t base, int k, std::size_t cap)
{
    std::size_t out = 1;
    for (int i = 0; i < k; ++i)
    {
        if (base != 0 && out > cap / base)
            return cap + 1;
        out *= base;
    }
    return out;
}

std::vector<Tuple> tuples_over(const std::vector<Element>& pool, int k)
{
    std::vector<Tuple> out{Tuple{}};
    for (int i = 0; i < k; ++i)
    {
        std::vector<Tuple> next;
        next.reserve(out.size() * pool.size());
        for (const auto& prefix : out)
            for (const auto& x : pool)
            {
                Tuple t = prefix;
                t.push_back(x);
                next.push_back(std::move(t));
            }
        out = std::move(next);
    }
    return out;
}

const char* kind_name(Support::Kind k)
{
    switch (k)
    {
        case Support::Kind::kFull: return "full";
        case Support::Kind::kBall: return "ball";
        case Support::Kind::kExplicit: return "explicit";
    }
    return "?";
}

MatrixXr to_rational(const MatrixX<Integer>& m)
{
    MatrixXr out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            out(i, j) = Rational(m(i, j));
    return out;
}

Chain zero_primitive(const Chain& z)
{
    return Chain(z.group(), z.degree() + 1);
}

}   // namespace

nlohmann::json Support::describe() const
{
    nlohmann::json j{{"kind", kind_name(kind)}, {"tuples", tuples.size()}};
    if (kind == Kind::kBall)
        j["radius"] = radius;
    return j;
}

Support full_support(const GroupPtr& g, int k, std::size_t cap)
{
    if (!g->is_finite())
        throw FillError("full support needs a finite group");
    if (tuple_count(g->order(), k, cap) > cap)
        throw TooLargeError("too large: |G|^" + std::to_string(k) + " exceeds the cap of "
                            + std::to_string(cap) + " tuples");
    Support s;
    s.kind = Support::Kind::kFull;
    s.tuples = all_tuples(*g, k);
    return s;
}

Support ball_support(const GroupPtr& g, int k, int radius, const std::vector<Element>& extra,
                     std::size_t max_tuples)
{
    std::set<Element> pool_set;
    for (const auto& x : g->ball(radius))
        pool_set.insert(x);
    for (const auto& x : extra)
        pool_set.insert(x);
    std::vector<Element> pool(pool_set.begin(), pool_set.end());
    if (tuple_count(pool.size(), k, max_tuples) > max_tuples)
        throw SupportExhaustedError("support exhausted: radius " + std::to_string(radius) + " gives "
                                    + std::to_string(pool.size()) + "^" + std::to_string(k)
                                    + " tuples, over the limit of " + std::to_string(max_tuples));
    Support s;
    s.kind = Support::Kind::kBall;
    s.radius = radius;
    s.tuples = tuples_over(pool, k);
    return s;
}

std::optional<std::string> FillCertificate::check() const
{
    if (c.degree() != z.degree() + 1)
        return "degree mismatch";
    if (!same_group(*c.group(), *z.group()))
        return "group mismatch";
    if (z.degree() == 0 && !z.is_zero())
        return "boundary mismatch";
    if (z.degree() > 0 || !c.is_zero())
        if (boundary(c) != z)
            return "boundary mismatch";
    const Rational nz = l1_norm(z);
    const Rational expect = nz == 0 ? Rational(0) : l1_norm(c) / nz;
    if (nz == 0 && !c.is_zero())
        return "nonzero primitive of the zero chain";
    if (expect != ratio)
        return "ratio mismatch: stored " + to_string(ratio) + ", recomputed " + to_string(expect);
    return std::nullopt;
}

FillCertificate fill_min(const Chain& z, const Support& support)
{
    if (z.degree() < 1)
        throw FillError("fill_min needs a chain of degree >= 1");
    FillCertificate cert{z, zero_primitive(z), 0, support.describe()};
    if (z.is_zero())
        return cert;

    const GroupPtr& g = z.group();
    const int k = z.degree() + 1;
    std::map<Tuple, Eigen::Index> row_of;
    auto row = [&](const Tuple& t) {
        auto [it, fresh] = row_of.try_emplace(t, static_cast<Eigen::Index>(row_of.size()));
        return it->second;
    };
    for (const auto& [t, v] : z.terms())
        row(t);
    std::vector<Eigen::Triplet<Rational>> trips;
    const Eigen::Index n = static_cast<Eigen::Index>(support.tuples.size());
    for (Eigen::Index j = 0; j < n; ++j)
    {
        const Tuple& t = support.tuples[j];
        if (static_cast<int>(t.size()) != k)
            throw FillError("support tuple of the wrong length");
        for (const Chain bd = boundary(Chain::basis(g, t)); const auto& [s, w] : bd.terms())
        {
            const Eigen::Index r = row(s);
            trips.emplace_back(r, j, w);
            trips.emplace_back(r, n + j, -w);
        }
    }
    LpProblem lp;
    const Eigen::Index m = static_cast<Eigen::Index>(row_of.size());
    lp.a.resize(m, 2 * n);
    lp.a.setFromTriplets(trips.begin(), trips.end());
    lp.b = VectorXr::Zero(m);
    for (const auto& [t, v] : z.terms())
        lp.b(row_of.at(t)) = v;
    lp.cost = VectorXr::Constant(2 * n, Rational(1));

    LpSolution sol = lp_solve(lp);
    if (sol.status != LpStatus::kOptimal)
        throw NotABoundaryError("not a boundary over this support ("
                                + std::to_string(support.tuples.size()) + " tuples)");
    for (Eigen::Index j = 0; j < n; ++j)
    {
        Rational v = sol.x(j) - sol.x(n + j);
        if (v != 0)
            cert.c.add(support.tuples[j], v);
    }
    cert.ratio = l1_norm(cert.c) / l1_norm(z);
    return cert;
}

FillCertificate fill_min(const Chain& z, const SupportPolicy& policy)
{
    if (z.degree() < 1)
        throw FillError("fill_min needs a chain of degree >= 1");
    const GroupPtr& g = z.group();
    const int k = z.degree() + 1;
    if (g->is_finite() && tuple_count(g->order(), k, policy.max_tuples) <= policy.max_tuples)
        return fill_min(z, full_support(g, k, policy.max_tuples));

    std::vector<Element> extra;
    for (const auto& [t, v] : z.terms())
        extra.insert(extra.end(), t.begin(), t.end());
    for (int radius = std::max(0, policy.initial_radius); radius <= policy.max_radius;
         radius = std::max(1, radius * 2))
    {
        Support s = ball_support(g, k, radius, extra, policy.max_tuples);
        try
        {
            return fill_min(z, s);
        }
        catch (const NotABoundaryError&)
        {
        }
    }
    throw SupportExhaustedError("support exhausted: no primitive up to word length "
                                + std::to_string(policy.max_radius));
}

bool is_boundary(const Chain& z, const Support& support)
{
    if (z.degree() == 0)
        return z.is_zero();
    try
    {
        fill_min(z, support);
        return true;
    }
    catch (const NotABoundaryError&)
    {
        return false;
    }
}

bool is_boundary(const Chain& z, const SupportPolicy& policy)
{
    if (z.degree() == 0)
        return z.is_zero();
    try
    {
        fill_min(z, policy);
        return true;
    }
    catch (const NotABoundaryError&)
    {
        return false;
    }
    catch (const SupportExhaustedError&)
    {
        return false;
    }
}

// --- boundary subspaces -----------------------------------------------------

BoundarySpace::BoundarySpace(GroupPtr g, int k, std::size_t cap) : group_(std::move(g)), degree_(k)
{
    if (!group_->is_finite())
        throw FillError("boundary spaces are computed for finite groups only");
    if (k < 0)
        throw FillError("negative degree");
    BoundaryMatrix d = boundary_matrix(group_, k + 1, cap);
    tuples_ = d.target;
    MatrixXr full = to_rational(d.dense());
    auto cols = independent_columns(full);
    basis_ = MatrixXr(full.rows(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t i = 0; i < cols.size(); ++i)
        basis_.col(static_cast<Eigen::Index>(i)) = full.col(cols[i]);
    MatrixXr bt = basis_.transpose();
    rows_ = independent_columns(bt);
    MatrixXr square(dim(), dim());
    for (std::size_t i = 0; i < rows_.size(); ++i)
        square.row(static_cast<Eigen::Index>(i)) = basis_.row(rows_[i]);
    inverse_rows_ = inverse_exact<Rational>(square);
}

Chain BoundarySpace::basis_chain(Eigen::Index i) const
{
    return chain_from_coordinates(group_, degree_, tuples_, basis_.col(i));
}

VectorXr BoundarySpace::coords(const Chain& c) const
{
    require_same_group(*group_, *c.group(), "boundary coordinates");
    if (c.degree() != degree_)
        throw FillError("boundary coordinates: degree mismatch");
    VectorXr x = coordinates(c, tuples_);
    VectorXr xr(dim());
    for (std::size_t i = 0; i < rows_.size(); ++i)
        xr(static_cast<Eigen::Index>(i)) = x(rows_[i]);
    VectorXr a = inverse_rows_ * xr;
    VectorXr back = basis_ * a;
    if (back != x)
        throw FillError("chain is not a boundary");
    return a;
}

bool BoundarySpace::contains(const Chain& c) const
{
    try
    {
        coords(c);
        return true;
    }
    catch (const FillError&)
    {
        return false;
    }
}

std::optional<std::vector<Chain>> BoundarySpace::vertices(std::size_t limit) const
{
    // A vertex of the sliced l1 ball is a support-minimal vector of B: it
    // vanishes on a set of d-1 rows whose restrictions are independent.
    const Eigen::Index d = dim();
    const Eigen::Index n = basis_.rows();
    std::vector<Chain> out;
    if (d == 0)
        return out;
    std::set<std::vector<Rational>> seen;
    std::size_t visited = 0;
    bool overflow = false;

    struct Pivot
    {
        Eigen::Index col;
        VectorXr row;
    };

    auto emit = [&](const std::vector<Pivot>& echelon) {
        std::vector<bool> used(d, false);
        for (const auto& p : echelon)
            used[p.col] = true;
        Eigen::Index free = 0;
        while (used[free])
            ++free;
        VectorXr a = VectorXr::Zero(d);
        a(free) = 1;
        for (const auto& p : echelon)
            a(p.col) = -p.row(free);
        VectorXr v = basis_ * a;
        Rational norm = 0;
        for (Eigen::Index i = 0; i < n; ++i)
            norm += abs(v(i));
        Eigen::Index lead = 0;
        while (v(lead) == 0)
            ++lead;
        if (v(lead) < 0)
            norm = -norm;
        std::vector<Rational> key(n);
        for (Eigen::Index i = 0; i < n; ++i)
            key[i] = v(i) / norm;
        if (seen.insert(key).second)
        {
            VectorXr kv(n);
            for (Eigen::Index i = 0; i < n; ++i)
                kv(i) = key[i];
            out.push_back(chain_from_coordinates(group_, degree_, tuples_, kv));
        }
    };

    std::vector<Pivot> echelon;
    auto dfs = [&](auto& self, Eigen::Index start) -> void {
        if (overflow)
            return;
        if (++visited > limit)
        {
            overflow = true;
            return;
        }
        if (static_cast<Eigen::Index>(echelon.size()) == d - 1)
        {
            emit(echelon);
            return;
        }
        const Eigen::Index need = d - 1 - static_cast<Eigen::Index>(echelon.size());
        for (Eigen::Index r = start; r + need <= n && !overflow; ++r)
        {
            VectorXr v = basis_.row(r).transpose();
            for (const auto& p : echelon)
                if (v(p.col) != 0)
                    v -= v(p.col) * p.row;
            Eigen::Index col = 0;
            while (col < d && v(col) == 0)
                ++col;
            if (col == d)
                continue;
            v /= Rational(v(col));
            std::vector<Pivot> saved = echelon;
            for (auto& p : echelon)
                if (p.row(col) != 0)
                    p.row -= p.row(col) * v;
            echelon.push_back(Pivot{col, v});
            self(self, r + 1);
            echelon = std::move(saved);
        }
    };
    dfs(dfs, 0);
    if (overflow)
        return std::nullopt;
    return out;
}

// --- UBC constants ------------------------------------------------------------

Rational sampled_kappa(const GroupPtr& g, int q, std::size_t samples, std::mt19937_64& rng,
                       std::vector<FillCertificate>* certificates)
{
    Rational best = 0;
    Support s = full_support(g, q + 1);
    for (std::size_t i = 0; i < samples; ++i)
    {
        Chain z = boundary(random_chain(g, q + 1, rng));
        if (z.is_zero())
            continue;
        FillCertificate cert = fill_min(z, s);
        best = std::max(best, cert.ratio);
        if (certificates)
            certificates->push_back(std::move(cert));
    }
    return best;
}

UbcConstant ubc_kappa_exact(const GroupPtr& g, int q, const UbcOptions& opts)
{
    if (!g->is_finite())
        throw FillError("exact UBC constants need a finite group");
    if (q < 1)
        throw FillError("UBC constants are defined in degrees q >= 1");
    if (tuple_count(g->order(), q + 1, opts.cap) > opts.cap)
        throw TooLargeError("too large: |G|^" + std::to_string(q + 1) + " exceeds the cap of "
                            + std::to_string(opts.cap));
    UbcConstant out;
    out.group = g;
    out.degree = q;

    BoundarySpace space(g, q, opts.cap);
    std::optional<std::vector<Chain>> verts;
    if (space.dim() <= opts.max_dimension)
        verts = space.vertices(opts.max_zero_sets);
    if (verts)
    {
        out.exact = true;
        out.method = "vertex-enumeration";
        Support s = full_support(g, q + 1, opts.cap);
        for (const auto& v : *verts)
        {
            FillCertificate cert = fill_min(v, s);
            out.kappa = std::max(out.kappa, cert.ratio);
            FillCertificate neg{-cert.z, -cert.c, cert.ratio, cert.support, cert.method};
            out.certificates.push_back(std::move(cert));
            out.certificates.push_back(std::move(neg));
        }
        out.upper = out.kappa;
        return out;
    }

    out.exact = false;
    out.method = "sampled";
    std::mt19937_64 rng(opts.seed);
    out.kappa = sampled_kappa(g, q, opts.samples, rng, &out.certificates);
    LinearSection section(identity_hom(g), q, SupportPolicy{}, opts.cap);
    out.upper = section.norm(0);
    return out;
}

// --- sections -------------------------------------------------------------------

SectionData section_on(const std::vector<Chain>& zs, const Homomorphism& h, const SupportPolicy& policy)
{
    SectionData out;
    for (const auto& z : zs)
    {
        require_same_group(*h.source(), *z.group(), "section_on");
        Chain pz = push(h, z);
        FillCertificate cert = pz.degree() == 0
                                   ? FillCertificate{pz, Chain(pz.group(), 1), 0, nlohmann::json::object()}
                                   : fill_min(pz, policy);
        if (pz.degree() == 0 && !pz.is_zero())
            throw NotABoundaryError("not a boundary: nonzero chain of degree 0");
        const Rational nz = l1_norm(z);
        Rational r = nz == 0 ? Rational(0) : l1_norm(cert.c) / nz;
        out.max_ratio = std::max(out.max_ratio, r);
        out.ratios.push_back(r);
        out.fills.push_back(std::move(cert));
    }
    return out;
}

LinearSection::LinearSection(const Homomorphism& h, int k, const SupportPolicy& policy, std::size_t cap)
    : hom_(h), space_(h.source(), k, cap)
{
    if (!h.target()->is_finite())
        throw FillError("linear sections need a finite target");
    for (Eigen::Index i = 0; i < space_.dim(); ++i)
        images_.push_back(fill_min(push(h, space_.basis_chain(i)), policy).c);
}

Chain LinearSection::operator()(const Chain& y) const
{
    VectorXr a = space_.coords(y);
    Chain out(hom_.target(), space_.degree() + 1);
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (a(i) != 0)
            out += a(i) * images_[static_cast<std::size_t>(i)];
    return out;
}

Rational LinearSection::norm(std::size_t limit, bool* exact) const
{
    if (auto verts = space_.vertices(limit))
    {
        Rational best = 0;
        for (const auto& v : *verts)
            best = std::max(best, l1_norm((*this)(v)));
        if (exact)
            *exact = true;
        return best;
    }
    // |S z| <= sum_r |z_r| sum_i |B_R^{-1}(i, r)| |S b_i| over an invertible row set R.
    MatrixXr basis = space_.basis();
    std::vector<Eigen::Index> rows = independent_columns(MatrixXr(basis.transpose()));
    MatrixXr square(basis.cols(), basis.cols());
    for (std::size_t i = 0; i < rows.size(); ++i)
        square.row(static_cast<Eigen::Index>(i)) = basis.row(rows[i]);
    MatrixXr inv = inverse_exact<Rational>(square);
    Rational best = 0;
    for (Eigen::Index r = 0; r < inv.cols(); ++r)
    {
        Rational s = 0;
        for (Eigen::Index i = 0; i < inv.rows(); ++i)
            s += abs(inv(i, r)) * l1_norm(images_[static_cast<std::size_t>(i)]);
        best = std::max(best, s);
    }
    if (exact)
        *exact = false;
    return best;
}

}   // namespace l1bar
