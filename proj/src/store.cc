#include <hog/error.hh>
#include <hog/json.hh>
#include <hog/store.hh>

#include <openssl/evp.h>

#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

namespace hog
{
    namespace
    {
        constexpr std::string_view format_file = "FORMAT";
        constexpr std::string_view records_file = "records.jsonl";

        auto format_stamp() -> std::string { return "hog-store " + std::to_string(store_schema_version) + "\n"; }

        auto snap(double v) -> double { return std::abs(v) < 1e-12 ? 0.0 : v; }

        auto random_token() -> std::string
        {
            std::random_device device;
            std::uniform_int_distribution<int> nibble(0, 15);
            std::string token;
            for (int i = 0; i < 40; ++i)
                token.push_back("0123456789abcdef"[nibble(device)]);
            return token;
        }

        void check_embedding(const std::optional<Embedding> & embedding, int n)
        {
            if (embedding && static_cast<int>(embedding->size()) != n)
                throw format_error("embedding has " + std::to_string(embedding->size()) + " points for "
                    + std::to_string(n) + " vertices");
        }
    }

    auto GraphRecord::value(InvariantId id) const -> InvariantValue
    {
        auto it = invariant_values.find(id);
        return it == invariant_values.end() ? InvariantValue::pending() : it->second;
    }

    auto hash_token(std::string_view token) -> std::string
    {
        unsigned char digest[EVP_MAX_MD_SIZE];
        unsigned int length = 0;
        EVP_Digest(token.data(), token.size(), digest, &length, EVP_sha256(), nullptr);
        std::string hex;
        for (unsigned i = 0; i < length; ++i) {
            hex.push_back("0123456789abcdef"[digest[i] >> 4]);
            hex.push_back("0123456789abcdef"[digest[i] & 15]);
        }
        return hex;
    }

    auto default_embedding(const Graph & g) -> Embedding
    {
        int n = g.order();
        auto labelling = canonical_form(g).labelling;
        Embedding points(n);
        for (int v = 0; v < n; ++v) {
            double angle = 2 * std::numbers::pi * labelling(v) / n;
            points[v] = Point{snap(std::cos(angle)), snap(std::sin(angle))};
        }
        return points;
    }

    Store::Store() = default;

    Store::Store(std::filesystem::path directory) : _directory(std::move(directory))
    {
        std::filesystem::create_directories(*_directory);
        auto stamp_path = *_directory / format_file;
        if (std::filesystem::exists(stamp_path)) {
            std::ifstream in{stamp_path};
            std::stringstream buffer;
            buffer << in.rdbuf();
            if (buffer.str() != format_stamp())
                throw format_error("store at " + _directory->string() + " has unsupported format '" + buffer.str() + "'");
        }
        else {
            std::ofstream out{stamp_path};
            out << format_stamp();
        }
        load();
        if (_journal_lines > _records.size() + _users.size())
            compact();
    }

    Store::~Store() = default;

    void Store::load()
    {
        std::ifstream in{*_directory / records_file};
        std::string line;
        std::size_t line_number = 0;
        while (std::getline(in, line)) {
            ++line_number;
            if (line.empty())
                continue;
            Json j;
            try {
                j = Json::parse(line);
            }
            catch (const Json::exception &) {
                // A torn final append is dropped; anything earlier is corruption.
                if (in.peek() == std::char_traits<char>::eof())
                    break;
                throw format_error("corrupt journal line " + std::to_string(line_number), std::nullopt, line_number);
            }
            ++_journal_lines;
            if (j.contains("user")) {
                auto user = user_from_json(j["user"]);
                _by_login[user.login] = user.id;
                _by_token_hash[user.token_hash] = user.id;
                _next_user = std::max(_next_user, user.id + 1);
                _users[user.id] = std::move(user);
            }
            else if (j.contains("record")) {
                auto record = record_from_json(j["record"]);
                _by_key[record.canonical_key.text] = record.id;
                _next_record = std::max(_next_record, record.id + 1);
                _records[record.id] = std::move(record);
            }
            else
                throw format_error("unrecognised journal line " + std::to_string(line_number), std::nullopt, line_number);
        }
    }

    void Store::append_record(const GraphRecord & record)
    {
        if (! _directory)
            return;
        std::ofstream out{*_directory / records_file, std::ios::app};
        out << Json{{"record", to_json(record)}}.dump() << '\n';
        out.flush();
        if (! out)
            throw std::runtime_error("failed to append to journal in " + _directory->string());
        ++_journal_lines;
    }

    void Store::append_user(const User & user)
    {
        if (! _directory)
            return;
        std::ofstream out{*_directory / records_file, std::ios::app};
        out << Json{{"user", to_json(user)}}.dump() << '\n';
        out.flush();
        if (! out)
            throw std::runtime_error("failed to append to journal in " + _directory->string());
        ++_journal_lines;
    }

    void Store::compact()
    {
        std::unique_lock lock{_mutex};
        if (! _directory)
            return;
        auto temporary = *_directory / (std::string{records_file} + ".tmp");
        {
            std::ofstream out{temporary, std::ios::trunc};
            for (const auto & [id, user] : _users)
                out << Json{{"user", to_json(user)}}.dump() << '\n';
            for (const auto & [id, record] : _records)
                out << Json{{"record", to_json(record)}}.dump() << '\n';
            out.flush();
            if (! out)
                throw std::runtime_error("failed to write " + temporary.string());
        }
        std::filesystem::rename(temporary, *_directory / records_file);
        _journal_lines = _users.size() + _records.size();
    }

    auto Store::clock() const -> std::int64_t
    {
        return std::chrono::duration_cast<std::chrono::seconds>(std::chrono::system_clock::now().time_since_epoch())
            .count();
    }

    auto Store::register_user(std::string_view login) -> Registration
    {
        if (login.empty())
            throw format_error("login must not be empty");
        std::unique_lock lock{_mutex};
        if (_by_login.contains(std::string{login}))
            throw format_error("login '" + std::string{login} + "' is already registered");
        auto token = random_token();
        User user{_next_user++, std::string{login}, hash_token(token)};
        append_user(user);
        _by_login[user.login] = user.id;
        _by_token_hash[user.token_hash] = user.id;
        _users[user.id] = user;
        return Registration{user, token};
    }

    auto Store::authenticate(std::string_view token) const -> std::optional<UserId>
    {
        auto digest = hash_token(token);
        std::shared_lock lock{_mutex};
        auto it = _by_token_hash.find(digest);
        if (it == _by_token_hash.end())
            return std::nullopt;
        return it->second;
    }

    auto Store::lookup_user_locked(UserId id) const -> const User *
    {
        auto it = _users.find(id);
        return it == _users.end() ? nullptr : &it->second;
    }

    auto Store::find_user(UserId id) const -> std::optional<User>
    {
        std::shared_lock lock{_mutex};
        if (auto u = lookup_user_locked(id))
            return *u;
        return std::nullopt;
    }

    auto Store::find_user(std::string_view login) const -> std::optional<User>
    {
        std::shared_lock lock{_mutex};
        auto it = _by_login.find(std::string{login});
        if (it == _by_login.end())
            return std::nullopt;
        return _users.at(it->second);
    }

    auto Store::insert_graph(const Graph & g, const GraphMetadata & meta, UserId user) -> InsertResult
    {
        check_embedding(meta.embedding, g.order());
        auto form = canonical_form(g);

        RecordId id = 0;
        {
            std::unique_lock lock{_mutex};
            if (! lookup_user_locked(user))
                throw Error{ErrorCode::unauthenticated, "unknown user " + std::to_string(user)};
            if (auto it = _by_key.find(form.key.text); it != _by_key.end())
                return InsertResult{it->second, false};

            GraphRecord record;
            record.id = _next_record;
            record.canonical_key = form.key;
            record.graph = permute(g, form.labelling);
            record.name = meta.name;
            record.owner = user;
            record.provenance = meta.provenance;
            if (meta.interesting_for)
                record.interesting_for = *meta.interesting_for;
            for (const auto & info : invariant_registry())
                record.invariant_values.emplace(info.id, InvariantValue::pending());
            if (meta.embedding) {
                record.embedding.resize(g.order());
                for (int v = 0; v < g.order(); ++v)
                    record.embedding[form.labelling(v)] = (*meta.embedding)[v];
            }
            else
                record.embedding = default_embedding(record.graph);

            append_record(record);
            ++_next_record;
            id = record.id;
            _by_key.emplace(form.key.text, id);
            _records.emplace(id, std::move(record));
        }

        if (_listener)
            _listener(id);
        return InsertResult{id, true};
    }

    auto Store::update_metadata(RecordId id, const GraphMetadata & meta, UserId user) -> GraphRecord
    {
        std::unique_lock lock{_mutex};
        if (! lookup_user_locked(user))
            throw Error{ErrorCode::unauthenticated, "unknown user " + std::to_string(user)};
        auto it = _records.find(id);
        if (it == _records.end())
            throw Error{ErrorCode::not_found, "no graph with id " + std::to_string(id)};
        if (it->second.owner != user)
            throw Error{ErrorCode::not_owner, "only the owner of graph " + std::to_string(id) + " may change it"};
        check_embedding(meta.embedding, it->second.graph.order());

        GraphRecord updated = it->second;
        if (meta.name)
            updated.name = *meta.name;
        if (meta.provenance)
            updated.provenance = *meta.provenance;
        if (meta.interesting_for)
            updated.interesting_for = *meta.interesting_for;
        if (meta.embedding)
            updated.embedding = *meta.embedding;
        append_record(updated);
        it->second = updated;
        return updated;
    }

    auto Store::add_comment(RecordId id, std::string_view text, UserId user) -> GraphRecord
    {
        if (text.find_first_not_of(" \t\r\n") == std::string_view::npos)
            throw format_error("comment text must not be empty");
        std::unique_lock lock{_mutex};
        if (! lookup_user_locked(user))
            throw Error{ErrorCode::unauthenticated, "unknown user " + std::to_string(user)};
        auto it = _records.find(id);
        if (it == _records.end())
            throw Error{ErrorCode::not_found, "no graph with id " + std::to_string(id)};
        GraphRecord updated = it->second;
        updated.comments.push_back(Comment{user, clock(), std::string{text}});
        append_record(updated);
        it->second = updated;
        return updated;
    }

    auto Store::get(RecordId id) const -> std::optional<GraphRecord>
    {
        std::shared_lock lock{_mutex};
        auto it = _records.find(id);
        if (it == _records.end())
            return std::nullopt;
        return it->second;
    }

    auto Store::lookup_by_canonical(const CanonicalKey & key) const -> std::optional<GraphRecord>
    {
        std::shared_lock lock{_mutex};
        auto it = _by_key.find(key.text);
        if (it == _by_key.end())
            return std::nullopt;
        return _records.at(it->second);
    }

    auto Store::size() const -> std::size_t
    {
        std::shared_lock lock{_mutex};
        return _records.size();
    }

    auto Store::snapshot() const -> std::vector<GraphRecord>
    {
        std::shared_lock lock{_mutex};
        std::vector<GraphRecord> result;
        result.reserve(_records.size());
        for (const auto & [id, record] : _records)
            result.push_back(record);
        return result;
    }

    void Store::read(const std::function<void(const std::map<RecordId, GraphRecord> &)> & f) const
    {
        std::shared_lock lock{_mutex};
        f(_records);
    }

    void Store::set_invariant(RecordId id, InvariantId invariant, const InvariantValue & value)
    {
        std::unique_lock lock{_mutex};
        auto it = _records.find(id);
        if (it == _records.end())
            throw Error{ErrorCode::not_found, "no graph with id " + std::to_string(id)};
        if (it->second.value(invariant) == value)
            return;
        GraphRecord updated = it->second;
        updated.invariant_values[invariant] = value;
        append_record(updated);
        it->second = std::move(updated);
    }

    void Store::set_insert_listener(std::function<void(RecordId)> listener)
    {
        std::unique_lock lock{_mutex};
        _listener = std::move(listener);
    }
}
