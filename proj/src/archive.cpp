#include "gsemo/archive.hpp"

#include <algorithm>
#include <stdexcept>

namespace gsemo {

namespace {
    auto by_y1 = [](Individual const& m, std::int64_t y1) { return m.objectives.y1 < y1; };
}

Archive::Archive(Problem problem)
    : problem_(problem)
{
}

bool Archive::try_insert(Individual ind)
{
    auto const& y = ind.objectives;
    // First member with z1 >= y1; it has the largest z2 among all such members.
    auto it = std::lower_bound(members_.begin(), members_.end(), y.y1, by_y1);
    if (it != members_.end() && it->objectives.y2 >= y.y2) {
        return false;
    }
    // Members with z1 <= y1 and z2 <= y2 form a contiguous block ending at it
    // (inclusive when z1 == y1).
    auto last = it;
    if (it != members_.end() && it->objectives.y1 == y.y1) {
        ++last;
    }
    auto first = last;
    while (first != members_.begin() && std::prev(first)->objectives.y2 <= y.y2) {
        --first;
    }
    it = members_.erase(first, last);
    if (is_pareto_optimal(problem_, y)) {
        ++front_members_;
    }
    members_.insert(it, std::move(ind));
    return true;
}

BestValues Archive::best_values() const
{
    if (members_.empty()) {
        throw std::logic_error("best_values: empty archive");
    }
    return { members_.back().objectives.y1, members_.front().objectives.y2 };
}

bool Archive::contains(ObjectiveVector const& y) const noexcept
{
    auto it = std::lower_bound(members_.begin(), members_.end(), y.y1, by_y1);
    return it != members_.end() && it->objectives == y;
}

bool Archive::is_edge(ObjectiveVector const& y) const
{
    if (!contains(y)) {
        throw std::invalid_argument("is_edge: not an archive member");
    }
    const auto best = best_values();
    return y.y1 == best.y1 || y.y2 == best.y2;
}

std::vector<ObjectiveVector> Archive::objective_vectors() const
{
    std::vector<ObjectiveVector> out;
    out.reserve(members_.size());
    for (auto const& m : members_) {
        out.push_back(m.objectives);
    }
    return out;
}

void Archive::write_snapshot(std::ostream& os) const
{
    for (auto const& m : members_) {
        os << m.objectives.y1 << ',' << m.objectives.y2 << ',' << m.genotype << '\n';
    }
}

} // namespace gsemo
