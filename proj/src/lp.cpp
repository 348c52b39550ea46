#include "l1bar/lp.hpp"

namespace l1bar {

namespace {

using RowMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct Tableau
{
    RowMatrix t;                       // m constraint rows + objective row; last column is rhs
    std::vector<Eigen::Index> basis;   // basic column per constraint row
    std::vector<bool> allowed;         // columns eligible to enter
    std::size_t pivots = 0;

    Eigen::Index rows() const { return t.rows() - 1; }
    Eigen::Index cols() const { return t.cols() - 1; }

    void pivot(Eigen::Index r, Eigen::Index s)
    {
        const Rational p = t(r, s);
        std::vector<Eigen::Index> nz;
        for (Eigen::Index j = 0; j < t.cols(); ++j)
            if (t(r, j) != 0)
            {
                t(r, j) /= p;
                nz.push_back(j);
            }
        for (Eigen::Index i = 0; i < t.rows(); ++i)
        {
            if (i == r || t(i, s) == 0)
                continue;
            const Rational f = t(i, s);
            for (Eigen::Index j : nz)
                t(i, j) -= f * t(r, j);
        }
        basis[r] = s;
        ++pivots;
    }

    // Bland's rule; returns false when unbounded.
    bool optimize()
    {
        const Eigen::Index obj = rows();
        for (;;)
        {
            Eigen::Index s = -1;
            for (Eigen::Index j = 0; j < cols(); ++j)
                if (allowed[j] && t(obj, j) < 0)
                {
                    s = j;
                    break;
                }
            if (s < 0)
                return true;
            Eigen::Index r = -1;
            Rational best;
            for (Eigen::Index i = 0; i < obj; ++i)
            {
                if (t(i, s) <= 0)
                    continue;
                Rational ratio = t(i, cols()) / t(i, s);
                if (r < 0 || ratio < best || (ratio == best && basis[i] < basis[r]))
                {
                    r = i;
                    best = ratio;
                }
            }
            if (r < 0)
                return false;
            pivot(r, s);
        }
    }

    void price(const VectorXr& cost)
    {
        const Eigen::Index obj = rows();
        for (Eigen::Index j = 0; j < t.cols(); ++j)
            t(obj, j) = j < cost.size() ? cost(j) : Rational(0);
        for (Eigen::Index i = 0; i < obj; ++i)
        {
            const Rational cb = basis[i] < cost.size() ? cost(basis[i]) : Rational(0);
            if (cb == 0)
                continue;
            for (Eigen::Index j = 0; j < t.cols(); ++j)
                if (t(i, j) != 0)
                    t(obj, j) -= cb * t(i, j);
        }
    }

    void drop_row(Eigen::Index r)
    {
        RowMatrix next(t.rows() - 1, t.cols());
        for (Eigen::Index i = 0, k = 0; i < t.rows(); ++i)
            if (i != r)
                next.row(k++) = t.row(i);
        t = std::move(next);
        basis.erase(basis.begin() + r);
    }
};

}   // namespace

LpProblem LpProblem::equality(const MatrixXr& a, const VectorXr& b, const VectorXr& cost)
{
    LpProblem p;
    p.a = a.sparseView(Rational(0), Rational(0)).template cast<Rational>();
    p.b = b;
    p.cost = cost;
    return p;
}

const char* to_string(LpStatus s)
{
    switch (s)
    {
        case LpStatus::kOptimal: return "optimal";
        case LpStatus::kInfeasible: return "infeasible";
        case LpStatus::kUnbounded: return "unbounded";
    }
    return "?";
}

LpSolution lp_solve(const LpProblem& problem)
{
    const Eigen::Index n = problem.variables();
    const Eigen::Index m0 = problem.constraints();
    if (problem.b.size() != m0 || problem.cost.size() != n)
        throw LpError("lp: dimension mismatch");
    if (!problem.senses.empty() && static_cast<Eigen::Index>(problem.senses.size()) != m0)
        throw LpError("lp: one sense per constraint expected");
    if (!problem.upper.empty() && static_cast<Eigen::Index>(problem.upper.size()) != n)
        throw LpError("lp: one upper bound per variable expected");

    // Gather rows as (coefficients, sense, rhs) with upper bounds appended.
    struct Row
    {
        std::vector<std::pair<Eigen::Index, Rational>> coeffs;
        Sense sense;
        Rational rhs;
    };
    std::vector<Row> rows;
    for (Eigen::Index i = 0; i < m0; ++i)
    {
        Row r{{}, problem.senses.empty() ? Sense::kEqual : problem.senses[i], problem.b(i)};
        for (decltype(problem.a)::InnerIterator it(problem.a, i); it; ++it)
            if (it.value() != 0)
                r.coeffs.emplace_back(it.col(), it.value());
        rows.push_back(std::move(r));
    }
    for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(problem.upper.size()); ++j)
        if (problem.upper[j])
            rows.push_back(Row{{{j, Rational(1)}}, Sense::kLessEqual, *problem.upper[j]});
    for (auto& r : rows)
        if (r.rhs < 0)
        {
            for (auto& [j, v] : r.coeffs)
                v = -v;
            r.rhs = -r.rhs;
            if (r.sense == Sense::kLessEqual)
                r.sense = Sense::kGreaterEqual;
            else if (r.sense == Sense::kGreaterEqual)
                r.sense = Sense::kLessEqual;
        }

    // Column layout: originals | slack/surplus | artificials.
    const Eigen::Index m = static_cast<Eigen::Index>(rows.size());
    Eigen::Index slacks = 0, artificials = 0;
    for (const auto& r : rows)
    {
        if (r.sense != Sense::kEqual)
            ++slacks;
        if (r.sense != Sense::kLessEqual)
            ++artificials;
    }
    const Eigen::Index first_art = n + slacks;
    const Eigen::Index total = first_art + artificials;

    Tableau tab;
    tab.t = RowMatrix::Zero(m + 1, total + 1);
    tab.basis.assign(m, -1);
    tab.allowed.assign(total, true);
    Eigen::Index next_slack = n, next_art = first_art;
    for (Eigen::Index i = 0; i < m; ++i)
    {
        for (const auto& [j, v] : rows[i].coeffs)
            tab.t(i, j) += v;
        tab.t(i, total) = rows[i].rhs;
        switch (rows[i].sense)
        {
            case Sense::kLessEqual:
                tab.t(i, next_slack) = 1;
                tab.basis[i] = next_slack++;
                break;
            case Sense::kGreaterEqual:
                tab.t(i, next_slack++) = -1;
                tab.t(i, next_art) = 1;
                tab.basis[i] = next_art++;
                break;
            case Sense::kEqual:
                tab.t(i, next_art) = 1;
                tab.basis[i] = next_art++;
                break;
        }
    }

    LpSolution sol;
    // Phase one: minimize the sum of artificials.
    if (artificials > 0)
    {
        VectorXr c1 = VectorXr::Zero(total);
        for (Eigen::Index j = first_art; j < total; ++j)
            c1(j) = 1;
        tab.price(c1);
        tab.optimize();
        if (tab.t(m, total) != 0)
        {
            sol.status = LpStatus::kInfeasible;
            sol.pivots = tab.pivots;
            return sol;
        }
        // Drive remaining artificials out of the basis; redundant rows go.
        for (Eigen::Index i = 0; i < tab.rows();)
        {
            if (tab.basis[i] < first_art)
            {
                ++i;
                continue;
            }
            Eigen::Index s = -1;
            for (Eigen::Index j = 0; j < first_art; ++j)
                if (tab.t(i, j) != 0)
                {
                    s = j;
                    break;
                }
            if (s >= 0)
            {
                tab.pivot(i, s);
                ++i;
            }
            else
                tab.drop_row(i);
        }
        for (Eigen::Index j = first_art; j < total; ++j)
            tab.allowed[j] = false;
    }

    VectorXr c2 = VectorXr::Zero(total);
    c2.head(n) = problem.cost;
    tab.price(c2);
    const bool bounded = tab.optimize();
    sol.pivots = tab.pivots;
    if (!bounded)
    {
        sol.status = LpStatus::kUnbounded;
        return sol;
    }
    sol.status = LpStatus::kOptimal;
    sol.x = VectorXr::Zero(n);
    for (Eigen::Index i = 0; i < tab.rows(); ++i)
        if (tab.basis[i] < n)
        {
            sol.x(tab.basis[i]) = tab.t(i, tab.cols());
            sol.basis.push_back(tab.basis[i]);
        }
    sol.value = problem.cost.dot(sol.x);
    return sol;
}

}   // namespace l1bar
