#ifndef HOG_STORE_HH
#define HOG_STORE_HH

#include <hog/record.hh>

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string_view>
#include <unordered_map>

namespace hog
{
    /// Optional fields of a submission or a metadata update. Absent fields are left alone.
    struct GraphMetadata
    {
        std::optional<std::string> name;
        std::optional<std::string> provenance;
        std::optional<std::set<InvariantId>> interesting_for;
        /// In the labelling of the graph being submitted (insert) or of the stored
        /// canonical graph (update).
        std::optional<Embedding> embedding;
    };

    struct InsertResult
    {
        RecordId id;
        bool created;
    };

    struct Registration
    {
        User user;
        std::string token; ///< shown once; only its hash is kept
    };

    /// Circular layout: vertex at canonical position k sits at angle 2πk/n on the unit circle.
    auto default_embedding(const Graph & g) -> Embedding;

    inline constexpr int store_schema_version = 1;

    /// Catalogue of graphs deduplicated up to isomorphism. Readers share the store;
    /// writers are serialised, so check-then-insert is atomic. When opened on a directory,
    /// every mutation is appended to a journal there before the call returns.
    class Store
    {
    public:
        /// In-memory only.
        Store();

        /// Creates the directory if needed and replays its journal.
        explicit Store(std::filesystem::path directory);

        ~Store();

        Store(const Store &) = delete;
        Store & operator=(const Store &) = delete;

        /// Throws hog::Error (bad_format) for an empty or duplicate login.
        auto register_user(std::string_view login) -> Registration;
        auto authenticate(std::string_view token) const -> std::optional<UserId>;
        auto find_user(UserId id) const -> std::optional<User>;
        auto find_user(std::string_view login) const -> std::optional<User>;

        /// Returns the existing id with created = false when an isomorphic copy is stored.
        /// Throws hog::Error: unauthenticated for an unknown user, bad_format for an
        /// embedding whose length differs from the vertex count.
        auto insert_graph(const Graph & g, const GraphMetadata & meta, UserId user) -> InsertResult;

        /// Owner only. Throws not_found, not_owner, unauthenticated, or bad_format.
        auto update_metadata(RecordId id, const GraphMetadata & meta, UserId user) -> GraphRecord;

        /// Any registered user. Throws not_found, unauthenticated, or bad_format for empty text.
        auto add_comment(RecordId id, std::string_view text, UserId user) -> GraphRecord;

        auto get(RecordId id) const -> std::optional<GraphRecord>;
        auto lookup_by_canonical(const CanonicalKey & key) const -> std::optional<GraphRecord>;
        auto size() const -> std::size_t;

        /// All records in id order.
        auto snapshot() const -> std::vector<GraphRecord>;

        /// Runs f under the shared lock; f must not call back into the store.
        void read(const std::function<void(const std::map<RecordId, GraphRecord> &)> & f) const;

        /// Overwrites one invariant value. Throws not_found.
        void set_invariant(RecordId id, InvariantId invariant, const InvariantValue & value);

        /// Called outside the lock, once per newly created record.
        void set_insert_listener(std::function<void(RecordId)> listener);

        /// Rewrites the journal with one line per record and user.
        void compact();

        auto directory() const -> const std::optional<std::filesystem::path> & { return _directory; }

    private:
        void load();
        void append_record(const GraphRecord & record);
        void append_user(const User & user);
        auto lookup_user_locked(UserId id) const -> const User *;
        auto clock() const -> std::int64_t;

        mutable std::shared_mutex _mutex;
        std::optional<std::filesystem::path> _directory;
        std::map<RecordId, GraphRecord> _records;
        std::unordered_map<std::string, RecordId> _by_key;
        std::map<UserId, User> _users;
        std::unordered_map<std::string, UserId> _by_login;
        std::unordered_map<std::string, UserId> _by_token_hash;
        RecordId _next_record = 1;
        UserId _next_user = 1;
        std::size_t _journal_lines = 0;
        std::function<void(RecordId)> _listener;
    };

    /// SHA-256 hex digest of a bearer token.
    auto hash_token(std::string_view token) -> std::string;
}

#endif
