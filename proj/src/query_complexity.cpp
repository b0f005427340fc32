#include "evenodd/query_complexity.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace evenodd {

namespace {

class TreeSearch {
public:
    TreeSearch(const Property& property, std::span<const TruthTable> domain) {
        for (const auto& f : domain) {
            const unsigned idx = f.index();
            if (members_ & (1u << idx)) throw std::invalid_argument("classical_min_queries: repeated truth table");
            members_ |= 1u << idx;
            labels_[idx] = property(f);
        }
    }

    int solve() const { return depth(members_, 0); }

private:
    // Worst-case queries still needed to decide every function in `alive`,
    // given that the points in `queried` have been asked already.
    int depth(std::uint32_t alive, unsigned queried) const {
        if (uniform(alive)) return 0;
        int best = std::numeric_limits<int>::max();
        for (unsigned x = 0; x < 4; ++x) {
            if (queried & (1u << x)) continue;
            std::uint32_t zero = 0;
            std::uint32_t one = 0;
            for (unsigned idx = 0; idx < 16; ++idx) {
                if (!(alive & (1u << idx))) continue;
                (TruthTable::from_index(idx)(x) ? one : zero) |= 1u << idx;
            }
            const int worst = 1 + std::max(depth(zero, queried | (1u << x)), depth(one, queried | (1u << x)));
            best = std::min(best, worst);
        }
        // Unreachable for distinct tables: four queries pin f down.
        if (best == std::numeric_limits<int>::max()) throw std::logic_error("classical_min_queries: undecidable");
        return best;
    }

    bool uniform(std::uint32_t alive) const {
        bool seen = false;
        int label = 0;
        for (unsigned idx = 0; idx < 16; ++idx) {
            if (!(alive & (1u << idx))) continue;
            if (seen && labels_[idx] != label) return false;
            seen = true;
            label = labels_[idx];
        }
        return true;
    }

    std::uint32_t members_ = 0;
    std::array<int, 16> labels_{};
};

}  // namespace

int classical_min_queries(const Property& property, std::span<const TruthTable> domain) {
    if (domain.empty()) throw std::invalid_argument("classical_min_queries: empty domain");
    return TreeSearch(property, domain).solve();
}

int classical_min_queries(const Property& property) {
    const auto all = enumerate_functions();
    return classical_min_queries(property, all);
}

Property parity_property() {
    return [](const TruthTable& f) { return classify(f).parity == Parity::Even ? 0 : 1; };
}

Property dj_property() {
    return [](const TruthTable& f) {
        switch (dj_class(classify(f))) {
            case DjClass::Constant: return 0;
            case DjClass::Balanced: return 1;
            case DjClass::Outside: break;
        }
        return 2;
    };
}

std::vector<TruthTable> dj_promise_domain() {
    std::vector<TruthTable> out;
    for (const auto& f : enumerate_functions())
        if (dj_class(classify(f)) != DjClass::Outside) out.push_back(f);
    return out;
}

}  // namespace evenodd
