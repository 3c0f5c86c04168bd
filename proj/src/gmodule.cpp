#include "perfgrp/gmodule.hpp"

#include "perfgrp/errors.hpp"

namespace perfgrp {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

std::vector<std::vector<std::int64_t>> augmentation_rows(const GModule& m,
                                                         const std::vector<std::vector<std::int64_t>>& from,
                                                         const std::vector<IntMatrix>& actions) {
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& y : from)
        for (const auto& t : actions) {
            auto z = row_times(y, t);
            for (std::size_t i = 0; i < z.size(); ++i)
                z[i] = mod(z[i] - y[i], m.orders()[i]);
            rows.push_back(std::move(z));
        }
    return rows;
}

std::vector<IntMatrix> matrices_for(const GModule& m, const std::vector<Permutation>& acting) {
    std::vector<IntMatrix> out;
    for (const auto& g : acting)
        out.push_back(m.action_matrix(g));
    return out;
}

std::vector<std::vector<std::int64_t>> unit_rows(const GModule& m) {
    std::vector<std::vector<std::int64_t>> rows;
    for (std::size_t i = 0; i < m.rank(); ++i) {
        std::vector<std::int64_t> e(m.rank(), 0);
        e[i] = 1;
        rows.push_back(std::move(e));
    }
    return rows;
}

} // namespace

GModule::GModule(const PermGroup& ambient, const PermGroup& carrier,
                 std::vector<Permutation> acting, std::uint64_t cap)
    : ambient_(ambient), coords_(carrier, cap), acting_(std::move(acting)) {
    if (!is_normal(ambient, carrier))
        throw PreconditionError("module carrier is not a normal subgroup of the ambient group");
    for (const auto& g : acting_) {
        if (!ambient.contains(g))
            throw PreconditionError("acting element " + g.to_string() + " not in ambient group");
        actions_.push_back(action_matrix(g));
    }
}

IntMatrix GModule::action_matrix(const Permutation& g) const {
    const std::size_t n = rank();
    IntMatrix t(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        auto row = coords_.encode(conjugate(coords_.basis()[i], g));
        for (std::size_t j = 0; j < n; ++j)
            t(i, j) = row[j];
    }
    return t;
}

Submodule::Submodule(const GModule& module, const std::vector<std::vector<std::int64_t>>& generators)
    : module_(&module), lattice_(0, module.rank()) {
    const std::size_t n = module.rank();
    IntMatrix m(0, n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::int64_t> e(n, 0);
        e[i] = module.orders()[i];
        m.append_row(e);
    }
    for (const auto& g : generators)
        m.append_row(module.coordinates().reduce(g));
    lattice_ = n == 0 ? IntMatrix(0, 0) : row_hermite(m);
}

void Submodule::add(std::span<const std::int64_t> y) {
    IntMatrix m = lattice_;
    m.append_row(module_->coordinates().reduce(y));
    lattice_ = row_hermite(m);
}

bool Submodule::contains(std::span<const std::int64_t> y) const {
    const std::size_t n = module_->rank();
    if (y.size() != n)
        throw InputError("submodule membership: wrong coordinate length");
    std::vector<std::int64_t> v(y.begin(), y.end());
    // lattice_ is square upper triangular (full rank)
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t p = lattice_(i, i);
        if (v[i] % p != 0)
            return false;
        std::int64_t q = v[i] / p;
        for (std::size_t j = i; j < n; ++j)
            v[j] -= q * lattice_(i, j);
    }
    return true;
}

std::uint64_t Submodule::order() const {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < module_->rank(); ++i)
        total *= static_cast<std::uint64_t>(module_->orders()[i] / lattice_(i, i));
    return total;
}

std::vector<std::vector<std::int64_t>> Submodule::generators() const {
    std::vector<std::vector<std::int64_t>> out;
    for (std::size_t i = 0; i < lattice_.rows(); ++i) {
        auto r = module_->coordinates().reduce(lattice_.row(i));
        bool zero = true;
        for (auto x : r)
            zero = zero && x == 0;
        if (!zero)
            out.push_back(std::move(r));
    }
    return out;
}

std::vector<Permutation> Submodule::generator_elements() const {
    std::vector<Permutation> out;
    for (const auto& y : generators())
        out.push_back(module_->decode(y));
    return out;
}

Submodule& Submodule::close_under(const std::vector<IntMatrix>& actions) {
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& y : generators())
            for (const auto& t : actions) {
                auto z = row_times(y, t);
                if (!contains(module_->coordinates().reduce(z))) {
                    add(z);
                    grew = true;
                }
            }
    }
    return *this;
}

Submodule augmentation_submodule(const GModule& m, const std::vector<Permutation>& acting) {
    auto actions = matrices_for(m, acting);
    Submodule s(m, augmentation_rows(m, unit_rows(m), actions));
    return s.close_under(actions);
}

Submodule augmentation_of(const Submodule& v, const std::vector<Permutation>& acting) {
    const auto& m = v.module();
    auto actions = matrices_for(m, acting);
    Submodule s(m, augmentation_rows(m, v.generators(), actions));
    return s.close_under(actions);
}

Submodule submodule_generated(const GModule& m, const std::vector<Permutation>& elements,
                              bool apply_augmentation) {
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& x : elements) {
        if (!m.carrier().contains(x))
            throw PreconditionError("element " + x.to_string() + " is not in the module carrier");
        rows.push_back(m.encode(x));
    }
    std::vector<IntMatrix> actions;
    for (std::size_t l = 0; l < m.acting().size(); ++l)
        actions.push_back(m.action(l));
    if (apply_augmentation)
        rows = augmentation_rows(m, rows, actions);
    Submodule s(m, rows);
    return s.close_under(actions);
}

bool is_perfect_module(const Submodule& v, const std::vector<Permutation>& acting) {
    return augmentation_of(v, acting) == v;
}

std::vector<Permutation> solve_commutator_decomposition(const GModule& m,
                                                        const Permutation& target) {
    const std::size_t n = m.rank();
    const std::size_t count = m.acting().size();
    if (!m.carrier().contains(target))
        throw PreconditionError("decomposition target is not in the module carrier");
    auto t = m.encode(target);
    if (!augmentation_submodule(m, m.acting()).contains(t))
        throw PreconditionError("decomposition target " + target.to_string() +
                                " is not in [A,G]");

    std::vector<Permutation> q(count, Permutation::identity(m.carrier().degree()));
    if (n == 0 || count == 0)
        return q;

    // sum_l q_l (T_l - I) + u D = t over the integers
    IntMatrix c(0, n);
    for (std::size_t l = 0; l < count; ++l)
        for (std::size_t i = 0; i < n; ++i) {
            auto r = m.action(l).row(i);
            r[i] -= 1;
            c.append_row(r);
        }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::int64_t> e(n, 0);
        e[i] = m.orders()[i];
        c.append_row(e);
    }
    auto x = solve_left(c, t);
    if (!x)
        throw InternalError("target lies in [A,G] but the linear system has no solution");
    for (std::size_t l = 0; l < count; ++l)
        q[l] = m.decode(std::span<const std::int64_t>(x->data() + l * n, n));

    auto check = Permutation::identity(m.carrier().degree());
    for (std::size_t l = 0; l < count; ++l)
        check *= commutator(q[l], m.acting()[l]);
    if (check != target)
        throw InternalError("commutator decomposition failed to reproduce its target");
    return q;
}

} // namespace perfgrp
