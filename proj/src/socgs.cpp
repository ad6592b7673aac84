#include "socstable/socgs.hpp"

#include "socstable/altered_preferences.hpp"

namespace socstable {

SocGsResult socgs(const Market& market) {
    AlteredPreferences prefs(market);
    SocGsResult result;

    auto run = [&](std::optional<int> promoted) {
        WomanOrder order = prefs.woman_order();
        DaResult da = man_proposing_da(market, order);
        result.iterations.push_back(
            {promoted, std::move(da.matching), std::move(da.trace), std::move(order)});
    };

    run(std::nullopt);

    // A man with an empty list never proposes, and his promotion cannot
    // change anyone else's outcome; spend his second chance without a rerun.
    for (int m = 0; m < market.man_count(); ++m)
        if (market.man_list(m).empty()) prefs.promote(m);

    for (;;) {
        const auto partner = man_partners(market, result.iterations.back().matching);
        int chosen = -1;
        for (int m = 0; m < market.man_count(); ++m) {
            if (partner[m] < 0 && !prefs.given_second_chance(m)) {
                chosen = m;
                break;
            }
        }
        if (chosen < 0) break;
        prefs.promote(chosen);
        run(chosen);
    }

    result.matching = result.iterations.back().matching;
    result.da_run_count = static_cast<int>(result.iterations.size());
    return result;
}

SocGsResult socgs(const Instance& instance) { return socgs(Market(instance)); }

Matching stable_baseline(const Market& market) {
    return man_proposing_da(market, true_woman_order(market)).matching;
}

Matching stable_baseline(const Instance& instance) { return stable_baseline(Market(instance)); }

} // namespace socstable
