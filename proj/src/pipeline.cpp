#include "l1bar/pipeline.hpp"

namespace l1bar {

namespace {

std::string where(const char* what, int p)
{
    return std::string(what) + " in bidegree component " + std::to_string(p);
}

void require_zero(const TensorChain& x, const std::string& what)
{
    if (!x.is_zero())
        throw PipelineError(what + " is not zero: " + format_tensor(x));
}

/// Checks that the (p, n-p) part of x lies in B_p (x) B_{n-p}.
void require_boundary_tensor(const TensorChain& x, int p, const std::string& what, std::size_t cap)
{
    const int n = x.degree();
    auto cols = columns(x, p);
    auto rws = rows(x, p);
    if (cols.empty())
        return;
    if (p == 0 || p == n)
        throw PipelineError(what + ": nonzero part of bidegree (" + std::to_string(p) + ", "
                            + std::to_string(n - p) + ") where B_0 = 0");
    BoundarySpace left(x.left(), p, cap), right(x.right(), n - p, cap);
    for (const auto& [r, c] : cols)
        if (!left.contains(c))
            throw PipelineError(what + ": left factor " + format_chain(c) + " is not a boundary");
    for (const auto& [l, c] : rws)
        if (!right.contains(c))
            throw PipelineError(what + ": right factor " + format_chain(c) + " is not a boundary");
}

}   // namespace

Homomorphism PipelineConfig::f() const
{
    return compose(psi, compose(phi_prime, phi));
}

void PipelineConfig::validate() const
{
    if (degree < 1)
        throw PipelineError("pipeline degree must be at least 1");
    require_same_group(*phi.target(), *phi_prime.source(), "pipeline (phi -> phi')");
    require_same_group(*phi_prime.target(), *psi.source(), "pipeline (phi' -> psi)");
    require_same_group(*psi.target(), *mitosis.group, "pipeline (psi -> i)");
    for (const auto& g : {phi.source(), phi.target(), psi.source(), psi.target(), mitosis.ambient})
        if (!g->is_finite())
            throw PipelineError("the pipeline runs on finite groups only");
}

PipelineConfig identity_config(const GroupPtr& g, int degree)
{
    return PipelineConfig{degree, identity_hom(g), identity_hom(g), identity_hom(g),
                          mitosis_of_finite_abelian(g), SupportPolicy{}, KappaMode::kExact,
                          kDefaultSizeCap};
}

TensorChain dmap(const Chain& z)
{
    const int q = z.degree();
    auto square = make_direct_product({z.group(), z.group()});
    TensorChain a = aw(push(diagonal(z.group(), square), z));
    // A(diag_* z) has (q, 0) part z (x) () and (0, q) part () (x) z
    TensorChain out(z.group(), z.group(), q);
    for (int p = 1; p < q; ++p)
        out += component(a, p);
    return out;
}

Pipeline::Pipeline(PipelineConfig cfg)
    : cfg_(std::move(cfg)), f_(cfg_.f()), mu_(mu_hom(cfg_.mitosis)),
      theta_{cfg_.mitosis.ambient, Element{}, HomotopyTheta::Orientation::kConjugation}
{
    cfg_.validate();
    const auto& m = cfg_.mitosis;
    if (!verify_mitosis(m).ok())
        throw PipelineError("mitosis data does not verify");
    const Group& big = *m.ambient;
    // Theta for k = s d^-1 joins id and gamma_k, with gamma_k o gamma_d = gamma_s
    theta_.conjugator = big.mul(m.s, big.inv(m.d));
    try
    {
        theta_self_test(theta_, std::min(cfg_.degree, 2), 50);
    }
    catch (const MitosisError& e)
    {
        throw PipelineError(std::string("Theta-orientation mismatch: ") + e.what());
    }
    Element w;
    if (!agree_on(compose(theta_.endpoint(), conjugation(m.ambient, m.d)), conjugation(m.ambient, m.s),
                  big.elements(), &w))
        throw PipelineError("Theta-orientation mismatch: gamma_k o gamma_d != gamma_s at " + big.format(w));

    const int q = cfg_.degree;
    for (int p = 1; p <= q - 2; ++p)
        section(cfg_.phi, p, 'S');
    for (int p = 1; p <= q - 1; ++p)
        section(cfg_.psi, p, 'T');
}

const LinearSection& Pipeline::section(const Homomorphism& h, int k, char which) const
{
    auto key = std::make_pair(which, k);
    auto it = sections_.find(key);
    if (it != sections_.end())
        return *it->second;
    auto s = std::make_unique<LinearSection>(h, k, cfg_.policy, cfg_.cap);
    if (cfg_.kappa_mode == KappaMode::kExact)
        norms_[key] = s->norm();
    return *sections_.emplace(key, std::move(s)).first->second;
}

Rational Pipeline::kappa() const
{
    if (cfg_.kappa_mode == KappaMode::kEmpirical)
        return empirical_;
    Rational k = 0;
    for (const auto& [key, n] : norms_)
        k = std::max(k, n);
    return k;
}

TensorChain Pipeline::emap(const TensorChain& x, EmapReport* report) const
{
    const int q = cfg_.degree;
    const GroupPtr& h = cfg_.phi.source();
    const GroupPtr& h1 = cfg_.phi.target();
    const GroupPtr& k = cfg_.psi.source();
    require_same_group(*x.left(), *h, "emap (left)");
    require_same_group(*x.right(), *h, "emap (right)");
    if (x.degree() != q)
        throw PipelineError("emap expects degree " + std::to_string(q));
    for (const auto& [key, v] : x.terms())
        if (key.first.empty() || key.second.empty())
            throw PipelineError("emap input has a part outside the intermediate bidegrees");
    // finite H is rationally acyclic, so in degree q >= 1 cycles are boundaries
    require_zero(boundary(x), "boundary of the emap input");

    Rational observed = 0;
    auto apply = [&](const LinearSection& s, const Chain& c) {
        Chain out = s(c);
        if (!c.is_zero())
            observed = std::max(observed, l1_norm(out) / l1_norm(c));
        return out;
    };

    // W = (S (x) S)(id (x) d) x, applied columnwise and then rowwise so that
    // only boundaries are fed to the (linear) sections
    TensorChain dx = boundary_right(x);
    TensorChain w(h1, h1, q + 1);
    for (int p = 0; p <= q - 1; ++p)
    {
        TensorChain part = component(dx, p);
        require_boundary_tensor(part, p, where("(id (x) d) x", p), cfg_.cap);
        if (part.is_zero())
            continue;
        const LinearSection& sl = section(cfg_.phi, p, 'S');
        const LinearSection& sr = section(cfg_.phi, q - 1 - p, 'S');
        TensorChain half(h1, h, q);
        for (const auto& [r, c] : columns(part, p))
            half += tensor(apply(sl, c), Chain::basis(h, r));
        for (const auto& [l, c] : rows(half, p + 1))
            w += tensor(Chain::basis(h1, l), apply(sr, c));
    }

    TensorChain u = push(cfg_.phi, cfg_.phi, x) - boundary(w);
    require_zero(boundary_right(u), "(id (x) d) U(x)");
    require_zero(boundary_left(u), "(d (x) id) U(x)");
    TensorChain y = push(cfg_.phi_prime, cfg_.phi_prime, u);
    for (int p = 0; p <= q; ++p)
        require_boundary_tensor(component(y, p), p, where("(phi' (x) phi') U(x)", p), cfg_.cap);

    const Homomorphism psi_phi1 = compose(cfg_.psi, cfg_.phi_prime);
    TensorChain e = push(psi_phi1, psi_phi1, w);
    // (T (x) (psi - T d)) y: the T d part vanishes because the right factors
    // of y are cycles
    for (int p = 1; p <= q - 1; ++p)
    {
        TensorChain part = component(y, p);
        if (part.is_zero())
            continue;
        const LinearSection& t = section(cfg_.psi, p, 'T');
        for (const auto& [r, c] : columns(part, p))
            e += tensor(apply(t, c), push(cfg_.psi, Chain::basis(k, r)));
    }
    if (boundary(e) != push(f_, f_, x))
        throw PipelineError("emap: d E(x) != (f (x) f) x");

    empirical_ = std::max(empirical_, observed);
    if (report)
        *report = EmapReport{u, y, observed};
    return e;
}

PipelineResult Pipeline::run(const Chain& z) const
{
    const int q = cfg_.degree;
    const auto& m = cfg_.mitosis;
    require_same_group(*z.group(), *cfg_.phi.source(), "pipeline input");
    if (z.degree() != q)
        throw PipelineError("pipeline expects a chain of degree " + std::to_string(q));
    if (!is_boundary(z, cfg_.policy))
        throw NotABoundaryError("pipeline input is not a boundary");

    const GroupPtr& square = mu_.source();
    const GroupPtr hsquare = make_direct_product({z.group(), z.group()});
    const Homomorphism inc_f = compose(m.inclusion, f_);
    PipelineResult r{z,
                     push(inc_f, z),
                     TensorChain(z.group(), z.group(), q),
                     TensorChain(m.group, m.group, q + 1),
                     XiFill{Chain(hsquare, q), FillCertificate{Chain(hsquare, q), Chain(hsquare, q + 1)}, 0},
                     Chain(square, q + 1),
                     Chain(m.ambient, q + 1)};
    if (z.is_zero())
    {
        r.kappa = kappa();
        r.bound = constant_c(q, r.kappa, 0);
        return r;
    }

    r.d = dmap(z);
    if (!r.d.is_zero())
        r.e = emap(r.d);
    r.xi = xi_fill(z, hsquare, cfg_.policy);
    // d xi = (B A - id) diag_* z, the negative of the usual homotopy term
    r.e_prime = cross_chain(r.e, square) - push(product_hom(f_, f_), r.xi.certificate.c);

    Chain shifted = push(conjugation(m.ambient, m.d), r.image);
    r.primitive = theta(theta_, shifted) - push(mu_, r.e_prime);
    if (boundary(r.primitive) != r.image)
        throw PipelineError("pipeline: d c' != (i o f)_* z");

    r.ratio = l1_norm(r.primitive) / l1_norm(z);
    r.kappa = kappa();
    r.bound = constant_c(q, r.kappa, r.xi.ratio);
    r.within_bound = r.ratio <= r.bound;
    return r;
}

FillCertificate PipelineResult::certificate() const
{
    FillCertificate c{image, primitive, 0, nlohmann::json{{"kind", "pipeline"}}, "mitosis-pipeline"};
    if (!image.is_zero())
        c.ratio = l1_norm(primitive) / l1_norm(image);
    return c;
}

TensorChain emap(const TensorChain& x, const PipelineConfig& cfg)
{
    return Pipeline(cfg).emap(x);
}

PipelineResult primitive_pipeline(const Chain& z, const PipelineConfig& cfg)
{
    return Pipeline(cfg).run(z);
}

Rational e_bound(int q, const Rational& kappa)
{
    const Rational n = q + 1;
    return kappa + 2 * n * kappa * kappa * (1 + n * kappa + n * n * kappa * kappa);
}

Rational constant_c(int q, const Rational& kappa, const Rational& xi)
{
    return Rational(q + 1) + Rational(binomial(q + 1, (q + 1) / 2)) * e_bound(q, kappa) * (q + 3) + xi;
}

ConstantTower tower(int q_max, const std::function<Rational(int)>& xi)
{
    if (q_max < 1)
        throw std::invalid_argument("tower needs q_max >= 1");
    ConstantTower t;
    t.records.push_back(TowerRecord{});
    for (int q = 1; q <= q_max; ++q)
    {
        const TowerRecord& prev = t.records.back();
        TowerRecord r;
        r.q = q;
        r.n = 3 * prev.n + 1;
        r.kappa_prev = prev.kappa;
        r.theta_bound = q + 1;
        r.aw_bound = q + 1;
        r.shuffle_bound = binomial(q + 1, (q + 1) / 2).convert_to<std::uint64_t>();
        r.e_bound = e_bound(q, prev.kappa);
        r.xi = xi(q);
        r.kappa = constant_c(q, prev.kappa, r.xi);
        t.records.push_back(r);
    }
    return t;
}

nlohmann::json ConstantTower::to_json() const
{
    auto out = nlohmann::json::array();
    for (const auto& r : records)
        out.push_back({{"q", r.q},
                       {"n", r.n},
                       {"kappa", to_string(r.kappa)},
                       {"kappa_prev", to_string(r.kappa_prev)},
                       {"theta_bound", r.theta_bound},
                       {"aw_bound", r.aw_bound},
                       {"shuffle_bound", r.shuffle_bound},
                       {"e_bound", to_string(r.e_bound)},
                       {"xi", to_string(r.xi)}});
    return out;
}

}   // namespace l1bar
