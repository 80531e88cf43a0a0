#ifndef HOG_API_HH
#define HOG_API_HH

#include <hog/error.hh>
#include <hog/jobs.hh>
#include <hog/json.hh>
#include <hog/store.hh>

#include <map>
#include <memory>
#include <optional>
#include <string>

namespace hog
{
    struct ApiRequest
    {
        std::string method;
        std::string path;
        std::map<std::string, std::string> query;
        /// The token from "Authorization: Bearer <token>", if any.
        std::optional<std::string> bearer;
        std::string body;
    };

    struct ApiResponse
    {
        int status = 200;
        std::string content_type = "application/json";
        std::string body;
        /// Suggested file name for downloads.
        std::optional<std::string> filename;
    };

    /// HTTP status used for each error code.
    auto http_status(ErrorCode code) -> int;

    /// {"error": {"code": ..., "message": ..., "offset"?: ..., "line"?: ...}}
    auto error_body(const Error & e) -> Json;

    /// The JSON API over a store and, optionally, its job queue. Requests are handled
    /// independently; all state lives in the store and queue.
    class ApiService
    {
    public:
        explicit ApiService(Store & store, JobQueue * jobs = nullptr);
        ~ApiService();

        ApiService(const ApiService &) = delete;
        ApiService & operator=(const ApiService &) = delete;

        /// Never throws; failures become an error envelope.
        auto handle(const ApiRequest & request) -> ApiResponse;

        /// Binds and serves until stop(). Port 0 picks a free port; see port().
        auto bind(const std::string & host, int port) -> bool;
        void listen();
        void stop();
        auto port() const -> int { return _port; }

    private:
        auto dispatch(const ApiRequest & request) -> ApiResponse;
        auto user_of(const ApiRequest & request) const -> UserId;

        auto register_user(const ApiRequest & request) -> ApiResponse;
        auto submit(const ApiRequest & request) -> ApiResponse;
        auto get_graph(RecordId id, const ApiRequest & request) -> ApiResponse;
        auto patch_graph(RecordId id, const ApiRequest & request) -> ApiResponse;
        auto comment(RecordId id, const ApiRequest & request) -> ApiResponse;
        auto retry(RecordId id, const ApiRequest & request) -> ApiResponse;
        auto search(const ApiRequest & request) -> ApiResponse;
        auto download(const ApiRequest & request) -> ApiResponse;
        auto invariants() -> ApiResponse;
        auto job_counts() -> ApiResponse;

        Store & _store;
        JobQueue * _jobs;
        struct Server;
        std::unique_ptr<Server> _server;
        int _port = 0;
    };
}

#endif
