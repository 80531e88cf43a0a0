#include <hog/api.hh>
#include <hog/cli.hh>
#include <hog/codecs.hh>
#include <hog/covering.hh>
#include <hog/error.hh>
#include <hog/jobs.hh>
#include <hog/query.hh>
#include <hog/seed.hh>
#include <hog/store.hh>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace hog::cli
{
    namespace
    {
        constexpr std::string_view operator_login = "operator";

        // A failure in the data the user pointed us at, as opposed to a bad command line.
        struct DataError : std::runtime_error
        {
            using std::runtime_error::runtime_error;
        };

        auto read_file(const std::string & path) -> std::string
        {
            std::ifstream in{path, std::ios::binary};
            if (! in)
                throw DataError{"cannot read " + path};
            std::ostringstream s;
            s << in.rdbuf();
            return s.str();
        }

        void write_file(const std::string & path, std::string_view data)
        {
            std::ofstream out{path, std::ios::binary | std::ios::trunc};
            if (! out)
                throw DataError{"cannot write " + path};
            out.write(data.data(), static_cast<std::streamsize>(data.size()));
            if (! out)
                throw DataError{"cannot write " + path};
        }

        auto default_store_path() -> std::string
        {
            if (const char * env = std::getenv("HOG_STORE"); env && *env)
                return env;
            return "hog-store";
        }

        auto operator_user(Store & store) -> UserId
        {
            if (auto user = store.find_user(operator_login))
                return user->id;
            return store.register_user(operator_login).user.id;
        }

        auto format_option(const std::string & name) -> GraphFormat
        {
            auto format = parse_graph_format(name);
            if (! format)
                throw CLI::ValidationError{"--format", "unknown graph format \"" + name + "\""};
            return *format;
        }

        auto describe(const Error & e) -> std::string
        {
            std::string text = e.what();
            if (e.offset() && e.code() == ErrorCode::bad_format)
                text += " (file byte offset " + std::to_string(*e.offset()) + ")";
            return text;
        }

        auto outcome_line(const InsertResult & r) -> std::string
        {
            return (r.created ? "stored id " : "duplicate of ") + std::to_string(r.id);
        }

        auto read_names(const std::string & path) -> std::vector<std::string>
        {
            std::vector<std::string> names;
            std::istringstream in{read_file(path)};
            for (std::string line; std::getline(in, line);) {
                if (! line.empty() && line.back() == '\r')
                    line.pop_back();
                names.push_back(line);
            }
            return names;
        }

        struct Decoded
        {
            std::vector<Graph> graphs;
            std::vector<std::string> failures;
        };

        // graph6 files are decoded line by line so one bad line does not hide the rest.
        auto decode_for_import(GraphFormat format, const std::string & data) -> Decoded
        {
            Decoded d;
            if (format != GraphFormat::graph6) {
                try {
                    d.graphs = decode_graphs(format, data);
                }
                catch (const Error & e) {
                    d.failures.push_back(describe(e));
                }
                return d;
            }
            std::size_t start = 0, line_no = 1;
            while (start < data.size()) {
                auto end = data.find('\n', start);
                if (end == std::string::npos)
                    end = data.size();
                std::string_view line{data.data() + start, end - start};
                if (! line.empty() && line.back() == '\r')
                    line.remove_suffix(1);
                if (! line.empty()) {
                    try {
                        d.graphs.push_back(decode_graph6(line));
                    }
                    catch (const Error & e) {
                        Error located{e.code(), "line " + std::to_string(line_no) + ": " + e.what(),
                            start + e.offset().value_or(0), line_no};
                        d.failures.push_back(describe(located));
                    }
                }
                start = end + 1;
                ++line_no;
            }
            return d;
        }

        struct Options
        {
            std::string store = default_store_path();

            std::string file, out_file, in_file;
            std::string format = "g6", from = "g6", to = "g6";
            std::string name_manifest;
            std::vector<std::string> steps;
            std::string sort = "id";
            std::size_t offset = 0;
            std::optional<std::size_t> limit;
            bool drain = false;
            std::string budget = "60s";
            int workers = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
            std::string listen = "127.0.0.1:8080";
            std::string bundle;
            std::string login;
            RecordId id = 0;
        };

        auto budget_option(const std::string & text) -> Budget
        {
            auto b = parse_budget(text);
            if (! b || *b <= Budget::zero())
                throw CLI::ValidationError{"--budget", "unreadable duration \"" + text + "\""};
            return *b;
        }

        auto cmd_import(const Options & o, std::ostream & out, std::ostream & err) -> int
        {
            auto format = format_option(o.format);
            if (format == GraphFormat::readable)
                throw CLI::ValidationError{"--format", "the readable format cannot be imported"};
            auto decoded = decode_for_import(format, read_file(o.file));
            std::vector<std::string> names;
            if (! o.name_manifest.empty())
                names = read_names(o.name_manifest);

            Store store{std::filesystem::path{o.store}};
            auto user = operator_user(store);
            for (std::size_t i = 0; i < decoded.graphs.size(); ++i) {
                GraphMetadata meta;
                if (i < names.size() && ! names[i].empty())
                    meta.name = names[i];
                out << outcome_line(store.insert_graph(decoded.graphs[i], meta, user)) << '\n';
            }
            for (const auto & f : decoded.failures)
                err << "error: " << f << '\n';
            return decoded.failures.empty() ? exit_ok : exit_data;
        }

        auto cmd_search(const Options & o, std::ostream & out) -> int
        {
            Query q;
            for (const auto & s : o.steps)
                q.steps.push_back(parse_step_spec(s));
            if (o.sort != "id") {
                auto id = find_invariant(o.sort);
                if (! id)
                    throw Error{ErrorCode::bad_query, "unknown sort invariant \"" + o.sort + "\""};
                q.sort.invariant = id;
            }
            q.offset = o.offset;
            q.limit = o.limit;

            Store store{std::filesystem::path{o.store}};
            if (! o.out_file.empty()) {
                auto format = format_option(o.format);
                auto page = run_query(store, q);
                write_file(o.out_file, export_records(page.records, format));
                out << page.records.size() << " of " << page.total << " graphs written to " << o.out_file << '\n';
                return exit_ok;
            }
            auto page = run_query(store, q);
            for (const auto & r : page.records)
                out << r.id << '\t' << encode_graph6(r.graph) << '\t' << r.name.value_or("") << '\n';
            return exit_ok;
        }

        auto cmd_convert(const Options & o, std::ostream & out) -> int
        {
            auto from = format_option(o.from);
            auto to = format_option(o.to);
            if (from == GraphFormat::readable)
                throw CLI::ValidationError{"--from", "the readable format cannot be read back"};
            auto graphs = decode_graphs(from, read_file(o.in_file));
            std::vector<GraphRecord> records;
            for (std::size_t i = 0; i < graphs.size(); ++i) {
                GraphRecord r;
                r.id = static_cast<RecordId>(i + 1);
                r.graph = std::move(graphs[i]);
                records.push_back(std::move(r));
            }
            write_file(o.out_file, export_records(records, to));
            out << records.size() << " graphs converted\n";
            return exit_ok;
        }

        auto cmd_compute(const Options & o, std::ostream & out) -> int
        {
            Store store{std::filesystem::path{o.store}};
            JobQueue jobs{store, budget_option(o.budget)};
            auto queued = jobs.enqueue_pending();
            if (o.drain)
                jobs.drain(o.workers);
            auto c = jobs.counts();
            out << "queued " << queued << ", done " << c.done << ", timed out " << c.timed_out << ", remaining "
                << c.queued << '\n';
            return exit_ok;
        }

        auto cmd_cover(const Options & o, std::ostream & out) -> int
        {
            auto specs = parse_conglomerate_file(read_file(o.file));
            Store store{std::filesystem::path{o.store}};

            std::vector<Conglomerate> cs;
            std::map<RecordId, CanonicalKey> keys;
            for (const auto & spec : specs) {
                Conglomerate c{spec.label, {}};
                for (const auto & text : spec.keys) {
                    auto key = canonical_key(decode_graph6(text));
                    auto record = store.lookup_by_canonical(key);
                    if (! record)
                        throw Error{ErrorCode::not_found, "conglomerate \"" + spec.label + "\": graph " + text
                                + " is not in the store"};
                    c.members.push_back(record->id);
                    keys.emplace(record->id, record->canonical_key);
                }
                cs.push_back(std::move(c));
            }
            auto cover = greedy_representatives(cs, [&](RecordId id) -> std::optional<CanonicalKey> {
                auto it = keys.find(id);
                if (it == keys.end())
                    return std::nullopt;
                return it->second;
            });

            for (auto rep : cover.representatives) {
                out << rep << " :";
                for (const auto & c : cs)
                    if (cover.assignment.at(c.label) == rep)
                        out << ' ' << c.label;
                out << '\n';
            }
            return exit_ok;
        }

        auto cmd_seed(const Options & o, std::ostream & out) -> int
        {
            auto entries = o.bundle.empty() ? seed_catalog() : read_seed_bundle(o.bundle);
            Store store{std::filesystem::path{o.store}};
            for (const auto & outcome : load_seed(store, entries, operator_user(store)))
                out << outcome.slug << ": " << outcome_line(outcome.result) << '\n';
            return exit_ok;
        }

        auto cmd_seed_export(const Options & o, std::ostream & out) -> int
        {
            auto entries = seed_catalog();
            write_seed_bundle(entries, o.bundle);
            out << entries.size() << " graphs written to " << o.bundle << '\n';
            return exit_ok;
        }

        auto cmd_show(const Options & o, std::ostream & out) -> int
        {
            Store store{std::filesystem::path{o.store}};
            auto record = store.get(o.id);
            if (! record)
                throw Error{ErrorCode::not_found, "no graph with id " + std::to_string(o.id)};
            out << export_records(std::span{&*record, 1}, format_option(o.format));
            return exit_ok;
        }

        auto cmd_register(const Options & o, std::ostream & out) -> int
        {
            Store store{std::filesystem::path{o.store}};
            auto reg = store.register_user(o.login);
            out << "user " << reg.user.id << " token " << reg.token << '\n';
            return exit_ok;
        }

        auto cmd_serve(const Options & o, std::ostream & out) -> int
        {
            auto colon = o.listen.rfind(':');
            if (colon == std::string::npos)
                throw CLI::ValidationError{"--listen", "expected host:port"};
            auto host = o.listen.substr(0, colon);
            int port = 0;
            try {
                port = std::stoi(o.listen.substr(colon + 1));
            }
            catch (const std::exception &) {
                throw CLI::ValidationError{"--listen", "expected host:port"};
            }

            Store store{std::filesystem::path{o.store}};
            JobQueue jobs{store, budget_option(o.budget)};
            jobs.attach();
            jobs.enqueue_pending();
            jobs.start(o.workers);
            ApiService api{store, &jobs};
            if (! api.bind(host, port))
                throw DataError{"cannot listen on " + o.listen};
            out << "listening on " << host << ':' << api.port() << std::endl;
            api.listen();
            jobs.stop();
            return exit_ok;
        }
    }

    auto run(std::vector<std::string> args, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{"Graph catalogue deduplicated up to isomorphism", "hog"};
        app.require_subcommand(1);
        Options o;
        auto store_option = [&](CLI::App * sub) {
            sub->add_option("--store", o.store, "Store directory (default $HOG_STORE or ./hog-store)");
        };

        auto * import = app.add_subcommand("import", "Add every graph in a file to the store");
        import->add_option("file", o.file, "Input file")->required();
        import->add_option("--format", o.format, "g6, mc or txt");
        import->add_option("--name-manifest", o.name_manifest, "One name per line, in file order");
        store_option(import);

        auto * search = app.add_subcommand("search", "Apply restriction steps to the stored graphs");
        search->add_option("--step", o.steps, "Restriction step; repeatable");
        search->add_option("--out", o.out_file, "Write the result to this file");
        search->add_option("--format", o.format, "Output file format");
        search->add_option("--sort", o.sort, "id or an invariant name");
        search->add_option("--offset", o.offset, "Skip this many results");
        search->add_option("--limit", o.limit, "Return at most this many results");
        store_option(search);

        auto * convert = app.add_subcommand("convert", "Re-encode a file of graphs");
        convert->add_option("in", o.in_file, "Input file")->required();
        convert->add_option("out", o.out_file, "Output file")->required();
        convert->add_option("--from", o.from, "Input format");
        convert->add_option("--to", o.to, "Output format");

        auto * compute = app.add_subcommand("compute", "Compute pending invariant values");
        compute->add_flag("--drain", o.drain, "Run workers until the queue is empty");
        compute->add_option("--budget", o.budget, "Time budget per exponential job, e.g. 60s or 250ms");
        compute->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
        store_option(compute);

        auto * cover = app.add_subcommand("cover", "Choose representatives for a conglomerate file");
        cover->add_option("file", o.file, "Lines of \"label : graph6 graph6 ...\"")->required();
        store_option(cover);

        auto * serve = app.add_subcommand("serve", "Run the HTTP API and background workers");
        serve->add_option("--listen", o.listen, "host:port");
        serve->add_option("--budget", o.budget, "Default budget per exponential job");
        serve->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
        store_option(serve);

        auto * seed = app.add_subcommand("seed", "Load the named classic graphs");
        seed->add_option("--bundle", o.bundle, "Read the catalogue from a bundle directory instead");
        store_option(seed);

        auto * seed_export = app.add_subcommand("seed-export", "Write the built-in catalogue as a bundle");
        seed_export->add_option("dir", o.bundle, "Output directory")->required();

        auto * show = app.add_subcommand("show", "Print one stored graph");
        show->add_option("id", o.id, "Graph id")->required();
        show->add_option("--format", o.format, "Output format");
        store_option(show);
        show->preparse_callback([&](std::size_t) { o.format = "readable"; });

        auto * reg = app.add_subcommand("register", "Create a user and print its token");
        reg->add_option("login", o.login, "Login name")->required();
        store_option(reg);

        try {
            std::reverse(args.begin(), args.end());
            app.parse(args);

            if (*import)
                return cmd_import(o, out, err);
            if (*search)
                return cmd_search(o, out);
            if (*convert)
                return cmd_convert(o, out);
            if (*compute)
                return cmd_compute(o, out);
            if (*cover)
                return cmd_cover(o, out);
            if (*serve)
                return cmd_serve(o, out);
            if (*seed)
                return cmd_seed(o, out);
            if (*seed_export)
                return cmd_seed_export(o, out);
            if (*show)
                return cmd_show(o, out);
            if (*reg)
                return cmd_register(o, out);
            return exit_usage;
        }
        catch (const CLI::CallForHelp & e) {
            return app.exit(e, out, err);
        }
        catch (const CLI::ParseError & e) {
            app.exit(e, out, err);
            return exit_usage;
        }
        catch (const Error & e) {
            err << "error: " << error_code_name(e.code()) << ": " << describe(e) << '\n';
            return exit_data;
        }
        catch (const DataError & e) {
            err << "error: " << e.what() << '\n';
            return exit_data;
        }
        catch (const std::exception & e) {
            err << "error: " << e.what() << '\n';
            return exit_data;
        }
    }
}
