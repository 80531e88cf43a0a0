#include <hog/covering.hh>
#include <hog/error.hh>

#include <algorithm>
#include <set>
#include <sstream>

namespace hog
{
    auto greedy_representatives(const std::vector<Conglomerate> & cs, const KeyLookup & key_of) -> Cover
    {
        std::set<std::string> labels;
        std::map<RecordId, CanonicalKey> keys;
        for (const auto & c : cs) {
            if (c.members.empty())
                throw format_error("conglomerate '" + c.label + "' has no members");
            if (! labels.insert(c.label).second)
                throw format_error("duplicate conglomerate label '" + c.label + "'");
            for (auto id : c.members) {
                if (keys.contains(id))
                    continue;
                auto key = key_of(id);
                if (! key)
                    throw format_error("conglomerate '" + c.label + "' names unknown graph " + std::to_string(id));
                keys.emplace(id, *key);
            }
        }

        // Work over label order so that the input order of cs cannot matter.
        std::map<std::string, std::set<RecordId>> uncovered;
        for (const auto & c : cs)
            uncovered[c.label].insert(c.members.begin(), c.members.end());

        Cover cover;
        while (! uncovered.empty()) {
            std::map<RecordId, int> counts;
            for (const auto & [label, members] : uncovered)
                for (auto id : members)
                    ++counts[id];

            RecordId pick = 0;
            int pick_count = -1;
            for (const auto & [id, count] : counts) {
                bool better = count > pick_count
                    || (count == pick_count && (keys.at(id) < keys.at(pick) || (keys.at(id) == keys.at(pick) && id < pick)));
                if (better) {
                    pick = id;
                    pick_count = count;
                }
            }

            cover.representatives.push_back(pick);
            for (auto it = uncovered.begin(); it != uncovered.end();)
                if (it->second.contains(pick)) {
                    cover.assignment.emplace(it->first, pick);
                    it = uncovered.erase(it);
                }
                else
                    ++it;
        }
        return cover;
    }

    auto verify_cover(const std::vector<Conglomerate> & cs, const std::vector<RecordId> & representatives) -> CoverCheck
    {
        std::set<RecordId> chosen(representatives.begin(), representatives.end());
        for (const auto & c : cs)
            if (std::none_of(c.members.begin(), c.members.end(), [&](RecordId id) { return chosen.contains(id); }))
                return CoverCheck{false, c.label};
        return CoverCheck{true, std::nullopt};
    }

    auto parse_conglomerate_file(std::string_view text) -> std::vector<ConglomerateSpec>
    {
        std::vector<ConglomerateSpec> result;
        std::istringstream in{std::string{text}};
        std::string line;
        std::size_t line_number = 0;
        while (std::getline(in, line)) {
            ++line_number;
            if (auto hash = line.find('#'); hash != std::string::npos)
                line.erase(hash);
            if (line.find_first_not_of(" \t\r") == std::string::npos)
                continue;
            // graph6 bytes lie in [63, 126], so the last ':' ends the label.
            auto colon = line.rfind(':');
            if (colon == std::string::npos)
                throw format_error("line " + std::to_string(line_number) + ": expected 'label : key ...'", std::nullopt,
                    line_number);
            auto label = line.substr(0, colon);
            label.erase(0, label.find_first_not_of(" \t"));
            label.erase(label.find_last_not_of(" \t") + 1);
            auto rest = line.substr(colon + 1);
            if (label.empty())
                throw format_error("line " + std::to_string(line_number) + ": empty label", std::nullopt, line_number);

            ConglomerateSpec spec{label, {}};
            std::istringstream keys{rest};
            std::string key;
            while (keys >> key)
                spec.keys.push_back(key);
            if (spec.keys.empty())
                throw format_error("line " + std::to_string(line_number) + ": conglomerate '" + label + "' has no members",
                    std::nullopt, line_number);
            result.push_back(std::move(spec));
        }
        return result;
    }
}
