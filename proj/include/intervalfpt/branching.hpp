#pragma once

#include <future>
#include <string>
#include <unordered_map>
#include <vector>

#include "graph.hpp"
#include "recognition.hpp"
#include "search.hpp"

namespace ifpt::detail {

// Bounded search tree shared by both solvers. Derived supplies
//   static Graph apply(const Graph&, const Mod&);
//   static std::size_t cost(const Mod&);
//   static void join(Mod& into, const Mod& part);
//   std::optional<Mod> expand(const Graph&, int k, std::size_t depth, bool flag);
// `flag` is solver specific state passed down unchanged by branch().
template <class Derived, class Mod>
class BranchEngine {
public:
    explicit BranchEngine(SolveOptions opt) : opt_(opt) {}
    const SearchStats& stats() const { return stats_; }

protected:
    std::optional<Mod> visit(const Graph& g, int k, std::size_t depth, bool flag) {
        if (commit_ && commit_->best.load() < index_) throw Cancelled{};
        ++stats_.nodes;
        stats_.max_depth = std::max(stats_.max_depth, depth);
        if (is_interval(g)) return Mod{};
        if (k <= 0) return std::nullopt;
        std::string key;
        if (opt_.memo) {
            key = g.fingerprint();
            auto it = no_.find(key);
            if (it != no_.end() && it->second >= k) {
                ++stats_.memo_hits;
                return std::nullopt;
            }
        }
        auto r = self().expand(g, k, depth, flag);
        if (!r && opt_.memo) {
            auto [it, fresh] = no_.try_emplace(std::move(key), k);
            if (!fresh) it->second = std::max(it->second, k);
        }
        return r;
    }

    // Tries the options in order; the first success wins.
    std::optional<Mod> branch(const Graph& g, int k, std::size_t depth, bool flag, const std::vector<Mod>& options) {
        if (opt_.parallel && depth == 0 && options.size() > 1) return branch_parallel(g, k, flag, options);
        for (const auto& m : options) {
            std::size_t c = Derived::cost(m);
            if (c > static_cast<std::size_t>(k)) continue;
            auto r = visit(Derived::apply(g, m), k - static_cast<int>(c), depth + 1, flag);
            if (r) {
                Derived::join(*r, m);
                return r;
            }
        }
        return std::nullopt;
    }

    SolveOptions opt_;
    SearchStats stats_;

private:
    struct Speculation {
        std::optional<Mod> found;
        SearchStats stats;
        bool cancelled = false;
    };

    std::optional<Mod> branch_parallel(const Graph& g, int k, bool flag, const std::vector<Mod>& options) {
        Commitment commit;
        std::vector<std::future<Speculation>> jobs;
        for (std::size_t i = 0; i < options.size(); ++i) {
            std::size_t c = Derived::cost(options[i]);
            if (c > static_cast<std::size_t>(k)) continue;
            jobs.push_back(std::async(std::launch::async, [&, i, c] {
                SolveOptions child_opt = opt_;
                child_opt.parallel = false;
                Derived child(child_opt);
                child.commit_ = &commit;
                child.index_ = i;
                Speculation s;
                try {
                    s.found = child.visit(Derived::apply(g, options[i]), k - static_cast<int>(c), 1, flag);
                    if (s.found) {
                        Derived::join(*s.found, options[i]);
                        commit.offer(i);
                    }
                } catch (const Cancelled&) {
                    s.cancelled = true;
                }
                s.stats = child.stats_;
                return s;
            }));
        }
        std::optional<Mod> answer;
        std::exception_ptr failure;
        for (auto& job : jobs) {
            try {
                Speculation s = job.get();
                stats_.merge(s.stats);
                if (!answer && !failure && s.found) answer = std::move(s.found);
            } catch (...) {
                if (!answer && !failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
        return answer;
    }

    Derived& self() { return static_cast<Derived&>(*this); }

    std::unordered_map<std::string, int> no_;
    Commitment* commit_ = nullptr;
    std::size_t index_ = 0;
};

}  // namespace ifpt::detail
