#include "crasze/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace crasze {

std::vector<RunRecord> run_batch(const std::vector<Instance>& instances, const SolveOptions& base,
                                 const std::vector<std::uint64_t>& seeds, int threads) {
    {
        std::vector<std::uint64_t> sorted = seeds;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("duplicate seed in batch");
    }

    const std::size_t n_tasks = instances.size() * seeds.size();
    std::vector<RunRecord> records(n_tasks);
    std::atomic<std::size_t> next{0};

    const auto worker = [&] {
        while (true) {
            const std::size_t task = next.fetch_add(1);
            if (task >= n_tasks) return;
            const Instance& inst = instances[task / seeds.size()];
            const std::uint64_t seed = seeds[task % seeds.size()];

            RunRecord rec;
            rec.instance = inst.name;
            rec.algorithm = base.algorithm;
            rec.seed = seed;
            rec.budget = inst.budget;
            try {
                SolveOptions opt = base;
                opt.seed = seed;
                const SolveArtifacts art = solve_instance(inst, opt);
                rec.prize = art.solution.prize;
                rec.cost = art.solution.cost;
                rec.runtime_s = art.solution.runtime_s;
                rec.truncated = art.solution.truncated;
            } catch (const std::exception& e) {
                rec.ok = false;
                rec.error = e.what();
            }
            records[task] = std::move(rec);
        }
    };

    const int n_threads = std::max(1, std::min<int>(threads, static_cast<int>(n_tasks)));
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    return records;
}

namespace {

struct Accum {
    double budget = 0.0;
    std::vector<double> prizes;
    std::vector<double> costs;
    std::vector<double> times;
};

double mean(const std::vector<double>& xs) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

double population_sd(const std::vector<double>& xs) {
    const double m = mean(xs);
    double s = 0.0;
    for (double x : xs) s += (x - m) * (x - m);
    return std::sqrt(s / static_cast<double>(xs.size()));
}

}  // namespace

std::string summary_csv(const std::vector<RunRecord>& records) {
    std::vector<std::pair<std::string, std::string>> order;
    std::map<std::pair<std::string, std::string>, Accum> groups;
    for (const RunRecord& r : records) {
        if (!r.ok) continue;
        const auto key = std::make_pair(r.instance, r.algorithm);
        if (!groups.count(key)) order.push_back(key);
        Accum& acc = groups[key];
        acc.budget = r.budget;
        acc.prizes.push_back(r.prize);
        acc.costs.push_back(r.cost);
        acc.times.push_back(r.runtime_s);
    }

    std::ostringstream out;
    out << "instance,algorithm,budget,prize_avg,prize_sd,cost_avg,cost_sd,time_avg_s,time_sd_s\n";
    for (const auto& key : order) {
        const Accum& acc = groups.at(key);
        out << key.first << "," << key.second << "," << format_double(acc.budget) << ","
            << format_double(mean(acc.prizes)) << "," << format_double(population_sd(acc.prizes))
            << "," << format_double(mean(acc.costs)) << ","
            << format_double(population_sd(acc.costs)) << "," << format_double(mean(acc.times))
            << "," << format_double(population_sd(acc.times)) << "\n";
    }
    return out.str();
}

std::vector<double> score_settings(const std::vector<std::vector<SettingObservation>>& by_setting) {
    if (by_setting.size() < 2) throw std::invalid_argument("need at least two settings to score");
    const std::size_t n_instances = by_setting.front().size();
    for (const auto& row : by_setting)
        if (row.size() != n_instances)
            throw std::invalid_argument("settings observed on different instance counts");

    std::vector<double> scores(by_setting.size(), 0.0);
    for (std::size_t k = 0; k < n_instances; ++k) {
        double min_c = by_setting[0][k].cost, max_c = min_c;
        double min_t = by_setting[0][k].time_s, max_t = min_t;
        for (const auto& row : by_setting) {
            min_c = std::min(min_c, row[k].cost);
            max_c = std::max(max_c, row[k].cost);
            min_t = std::min(min_t, row[k].time_s);
            max_t = std::max(max_t, row[k].time_s);
        }
        for (std::size_t s = 0; s < by_setting.size(); ++s) {
            const double term_c =
                max_c - min_c <= 0.0 ? 1.0 : (max_c - by_setting[s][k].cost) / (max_c - min_c);
            const double term_t =
                max_t - min_t <= 0.0 ? 1.0 : (max_t - by_setting[s][k].time_s) / (max_t - min_t);
            scores[s] += 0.5 * (term_c + term_t);
        }
    }
    return scores;
}

}  // namespace crasze
