#pragma once

#include "gsemo/core.hpp"
#include "gsemo/problems.hpp"

#include <cstddef>
#include <ostream>
#include <vector>

namespace gsemo {

/// Genotype with its objectives and the per-solution adaptation state.
/// strength and stagnation are only read by AGSEMO; other algorithms leave
/// them at r = 1, c = 0.
struct Individual {
    Bitstring genotype;
    ObjectiveVector objectives;
    double strength { 1.0 };
    int stagnation { 0 };
};

struct BestValues {
    std::int64_t y1;
    std::int64_t y2;
};

/// Population of mutually non-dominated individuals, one per objective vector.
///
/// Members are kept sorted by y1 ascending. Since no member weakly dominates
/// another, y2 is then strictly descending: the member with the best y2 is
/// first and the member with the best y1 is last.
class Archive {
public:
    explicit Archive(Problem problem);

    /// Rejects ind if a member weakly dominates it (including an equal
    /// objective vector); otherwise removes every member ind weakly dominates
    /// and inserts ind.
    bool try_insert(Individual ind);

    std::vector<Individual> const& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    Problem const& problem() const noexcept { return problem_; }

    /// Componentwise maxima. Throws std::logic_error when empty.
    BestValues best_values() const;

    /// True iff the member holding these objectives attains y1* or y2*.
    /// Throws std::invalid_argument if no member has these objectives.
    bool is_edge(ObjectiveVector const& y) const;
    bool is_edge(Individual const& ind) const { return is_edge(ind.objectives); }

    /// Index-based variant for callers iterating members().
    bool is_edge_at(std::size_t index) const noexcept { return index == 0 || index + 1 == members_.size(); }

    bool contains(ObjectiveVector const& y) const noexcept;

    bool is_front_complete() const noexcept { return front_members_ == pareto_front_size(problem_); }
    std::size_t front_members() const noexcept { return front_members_; }

    std::vector<ObjectiveVector> objective_vectors() const;

    /// One line per member: "y1,y2,genotype".
    void write_snapshot(std::ostream& os) const;

private:
    Problem problem_;
    std::vector<Individual> members_;
    std::size_t front_members_ { 0 };
};

} // namespace gsemo
