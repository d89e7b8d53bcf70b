// SPDX-License-Identifier: Apache-2.0
//
// pixelfas - reconfigurable pixel antenna state synthesis for fluid antenna systems
// Copyright (C) 2026 The pixelfas authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
#include "pixelfas/app/commands.hpp"

#include "pixelfas/app/reports.hpp"
#include "pixelfas/em/io.hpp"
#include "pixelfas/em/surrogate.hpp"
#include "pixelfas/hash.hpp"
#include "pixelfas/impm/circuit.hpp"
#include "pixelfas/pcdm/covariance.hpp"
#include "pixelfas/search/pipeline.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <climits>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <map>
#include <ostream>
#include <set>

namespace pixelfas::app
{
    using json = nlohmann::ordered_json;
    namespace fs = std::filesystem;

    std::string tool_version() { return "0.1.0"; }

    namespace
    {
        std::string utc_now()
        {
            const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
            std::tm tm{};
            gmtime_r(&now, &tm);
            char buf[32];
            std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
            return buf;
        }

        std::string bit_string(const std::vector<std::uint8_t> &bits)
        {
            std::string s;
            for (auto b : bits)
                s += char('0' + b);
            return s;
        }

        void require_out_dir(const fs::path &dir)
        {
            if (dir.empty())
                throw ConfigError("--out <dir> is required");
            if (!fs::is_directory(dir))
                throw ConfigError("output directory does not exist: " + dir.string());
        }

        void write_json(const fs::path &path, const json &j)
        {
            std::ofstream out(path);
            if (!out)
                throw Error("cannot write " + path.string());
            out << j.dump(2) << '\n';
            if (!out)
                throw Error("write failed for " + path.string());
        }

        search::PipelineParams pipeline_params(const RunConfig &config)
        {
            search::PipelineParams p;
            p.search.switches = config.switches;
            p.search.ports = config.fas_ports;
            p.search.budget = config.budget;
            p.search.target = config.target_matched_sets;
            p.search.seed = config.seed;
            p.search.threads = config.threads;
            p.ga = config.ga;
            p.ga.seed = config.seed;
            p.aperture_wavelengths = config.aperture_wavelengths;
            p.baseline_samples = config.baseline_samples;
            return p;
        }

        // Records what went in and what came out; the only place holding wall-clock time.
        class Manifest
        {
        public:
            Manifest(std::string command, const RunConfig &config, const CommandOptions &options)
                : command_(std::move(command)), config_(config), options_(options), started_(utc_now())
            {
            }

            void add_output(const fs::path &file) { outputs_.push_back(file); }

            void write(const fs::path &dir) const
            {
                json j;
                j["tool"] = "pixelfas";
                j["version"] = tool_version();
                j["command"] = command_;
                j["config_path"] = options_.config_path.string();
                j["config_hash"] = hex64(config_.content_hash);
                j["master_seed"] = config_.seed;
                j["threads"] = config_.threads;
                j["started_utc"] = started_;
                j["finished_utc"] = utc_now();
                json inputs = json::object();
                if (!options_.config_path.empty())
                    inputs[options_.config_path.string()] = file_digest(options_.config_path);
                if (config_.mode == InputMode::files)
                {
                    inputs[config_.network_path.string()] = file_digest(config_.network_path);
                    for (const auto &entry : fs::directory_iterator(config_.pattern_dir))
                        if (entry.is_regular_file())
                            inputs[entry.path().string()] = file_digest(entry.path());
                }
                for (const auto *p : {&options_.state_table, &options_.design})
                    if (!p->empty())
                        inputs[p->string()] = file_digest(*p);
                j["inputs"] = inputs;
                json outputs = json::object();
                for (const auto &f : outputs_)
                    outputs[f.filename().string()] = file_digest(f);
                j["outputs"] = outputs;
                write_json(dir / "manifest.json", j);
            }

        private:
            std::string command_;
            const RunConfig &config_;
            const CommandOptions &options_;
            std::string started_;
            std::vector<fs::path> outputs_;
        };

        json stats_json(const search::SearchStats &s)
        {
            json j;
            j["sets_tried"] = s.sets_tried;
            j["states_evaluated"] = s.states_evaluated;
            j["singular_states"] = s.singular_states;
            j["duplicate_draws"] = s.duplicate_draws;
            j["best_reflection_db"] = s.best_reflection_db ? json(*s.best_reflection_db) : json(nullptr);
            j["largest_matched_count"] = s.largest_matched_count;
            return j;
        }

        json common_header(const std::string &command, const RunConfig &config, const std::vector<double> &freqs)
        {
            json j;
            j["command"] = command;
            j["mode"] = to_string(config.mode);
            j["fas_ports"] = config.fas_ports;
            j["aperture_wavelengths"] = config.aperture_wavelengths;
            if (config.mode != InputMode::dipole)
            {
                j["switches"] = config.switches;
                j["z0_ohm"] = config.z0_ohm;
            }
            j["pas_support"] = numerics::to_string(config.pas_support);
            j["frequencies_hz"] = freqs;
            return j;
        }

        // Frequency mean of |rho| and of the absolute error against |target|.
        std::pair<numerics::RealMatrix, numerics::RealMatrix> mean_matrices(const std::vector<numerics::RealMatrix> &sel,
                                                                            const pcdm::TargetCovariance &target)
        {
            const std::size_t n = target.n;
            numerics::RealMatrix mean(n, n), err(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                {
                    double a = 0.0, e = 0.0;
                    for (const auto &m : sel)
                    {
                        a += std::abs(m(i, j));
                        e += std::abs(std::abs(m(i, j)) - std::abs(target.rho(i, j)));
                    }
                    mean(i, j) = a / double(sel.size());
                    err(i, j) = e / double(sel.size());
                }
            return {mean, err};
        }

        void write_covariance_files(const fs::path &dir, const std::vector<numerics::RealMatrix> &selected,
                                    const pcdm::TargetCovariance &target, Manifest &manifest, json &files)
        {
            const auto [mean, err] = mean_matrices(selected, target);
            numerics::RealMatrix target_abs(target.n, target.n);
            for (std::size_t i = 0; i < target.n; ++i)
                for (std::size_t j = 0; j < target.n; ++j)
                    target_abs(i, j) = std::abs(target.rho(i, j));
            auto emit = [&](const std::string &name, const numerics::RealMatrix &m)
            {
                write_matrix_csv(dir / name, m);
                manifest.add_output(dir / name);
                files.push_back(name);
            };
            emit("covariance_sim.csv", mean);
            emit("covariance_target.csv", target_abs);
            emit("covariance_abs_error.csv", err);
            if (selected.size() > 1)
                for (std::size_t t = 0; t < selected.size(); ++t)
                    emit("covariance_sim_f" + std::to_string(t + 1) + ".csv", selected[t]);
        }

        void write_reflection_csv(const fs::path &path, const std::vector<search::StateResponse> &states,
                                  const std::vector<double> &freqs, const std::map<std::uint64_t, std::size_t> &port_of,
                                  const std::vector<std::size_t> &set_labels = {})
        {
            std::ofstream out(path);
            if (!out)
                throw Error("cannot write " + path.string());
            out << (set_labels.empty() ? "" : "set,") << "state_index,fas_port,frequency_hz,z_in_re_ohm,z_in_im_ohm,reflection_db\n";
            for (std::size_t s = 0; s < states.size(); ++s)
            {
                const auto &r = states[s];
                const auto it = port_of.find(r.state_index);
                for (std::size_t t = 0; t < r.reflection_db.size(); ++t)
                {
                    if (!set_labels.empty())
                        out << set_labels[s] << ',';
                    out << r.state_index << ',' << (it == port_of.end() || !set_labels.empty() ? 0 : it->second) << ','
                        << em::format_double(freqs[t]) << ',' << em::format_double(r.z_in[t].real()) << ','
                        << em::format_double(r.z_in[t].imag()) << ',' << em::format_double(r.reflection_db[t]) << '\n';
                }
            }
            if (!out)
                throw Error("write failed for " + path.string());
        }

        json reflection_json(const std::vector<search::StateResponse> &states)
        {
            json arr = json::array();
            for (const auto &r : states)
                arr.push_back({{"state_index", r.state_index},
                               {"reflection_db", r.reflection_db},
                               {"worst_reflection_db", r.worst_reflection_db}});
            return arr;
        }

        // Writes result.json, covariance, reflection and state-table files for a finished ordering run.
        int emit_run(const std::string &command, const RunConfig &config, const CommandOptions &options,
                     const search::RunResult &run, const std::vector<double> &freqs, std::ostream &log)
        {
            const fs::path &dir = options.out_dir;
            Manifest manifest(command, config, options);
            json j = common_header(command, config, freqs);
            json files = json::array();

            if (run.no_solution)
            {
                j["status"] = "no_solution";
                j["search_stats"] = stats_json(run.stats);
                j["files"] = files;
                write_json(dir / "result.json", j);
                manifest.add_output(dir / "result.json");
                manifest.write(dir);
                log << "no matched set with at least " << config.fas_ports << " matched states after "
                    << run.stats.sets_tried << " candidate sets";
                if (run.stats.best_reflection_db)
                    log << " (best reflection " << *run.stats.best_reflection_db << " dB)";
                log << '\n';
                return exit_code::no_solution;
            }

            j["status"] = "ok";
            j["delta_e"] = run.error;
            j["random_baseline_delta_e"] = run.baseline_mean_error;
            j["baseline_samples"] = config.baseline_samples;
            j["ordering"] = run.ordering;

            const bool has_design = !run.best.members.empty();
            std::map<std::uint64_t, std::size_t> port_of;
            StateTable table;
            if (has_design)
            {
                table.switch_positions = run.best.parent.switch_positions;
                const auto rows = run.state_table();
                for (std::size_t n = 0; n < run.ordering.size(); ++n)
                {
                    const auto state = run.best.members[run.ordering[n] - 1].state_index;
                    port_of[state] = n + 1;
                    table.ports.push_back(n + 1);
                    table.state_indices.push_back(state);
                    table.bits.push_back(rows[n]);
                }
                json design;
                design["candidate_index"] = run.best.candidate_index;
                design["switch_positions"] = run.best.parent.switch_positions;
                design["hardwire_bits"] = bit_string(run.best.parent.hardwire);
                design["matched_states"] = run.best.m();
                std::vector<std::uint64_t> member_states;
                for (const auto &m : run.best.members)
                    member_states.push_back(m.state_index);
                design["member_state_indices"] = member_states;
                j["design"] = design;
            }
            else
            {
                for (std::size_t n = 0; n < run.ordering.size(); ++n)
                {
                    table.ports.push_back(n + 1);
                    table.state_indices.push_back(run.ordering[n]);
                    table.bits.emplace_back();
                }
            }

            json st = json::array();
            for (std::size_t n = 0; n < table.ports.size(); ++n)
            {
                json row{{"port", table.ports[n]}, {"state_index", table.state_indices[n]}};
                if (has_design)
                    row["switch_bits"] = bit_string(table.bits[n]);
                st.push_back(row);
            }
            j["state_table"] = st;
            if (has_design)
                j["reflection"] = reflection_json(run.best.members);

            json ga;
            ga["evaluations"] = run.per_set.empty() ? 0 : run.per_set[run.best_set].evaluations;
            ga["best_trace"] = run.best_trace;
            j["ga"] = ga;

            json per_set = json::array();
            for (const auto &s : run.per_set)
                per_set.push_back({{"candidate_index", s.candidate_index},
                                   {"matched_states", s.m},
                                   {"delta_e", s.error},
                                   {"ordering", s.ordering}});
            j["per_set"] = per_set;
            j["best_set"] = run.best_set;
            j["search_stats"] = stats_json(run.stats);

            write_covariance_files(dir, run.selected, run.target, manifest, files);
            if (has_design)
            {
                write_reflection_csv(dir / "reflection.csv", run.best.members, freqs, port_of);
                manifest.add_output(dir / "reflection.csv");
                files.push_back("reflection.csv");
            }
            write_state_table(dir / "state_table.csv", table);
            manifest.add_output(dir / "state_table.csv");
            files.push_back("state_table.csv");

            j["files"] = files;
            write_json(dir / "result.json", j);
            manifest.add_output(dir / "result.json");
            manifest.write(dir);
            log << "delta_e = " << em::format_double(run.error) << " (random baseline "
                << em::format_double(run.baseline_mean_error) << ")\n";
            return exit_code::ok;
        }

        search::StateSet design_from(const RunConfig &config, const CommandOptions &options, std::size_t q)
        {
            search::StateSet set;
            if (!options.design.empty())
            {
                std::ifstream in(options.design);
                if (!in)
                    throw ConfigError("cannot open design file " + options.design.string());
                json j;
                try
                {
                    in >> j;
                    const auto &d = j.at("design");
                    set.switch_positions = d.at("switch_positions").get<std::vector<std::size_t>>();
                    for (char c : d.at("hardwire_bits").get<std::string>())
                        set.hardwire.push_back(std::uint8_t(c == '1'));
                }
                catch (const json::exception &e)
                {
                    throw ParseError(options.design.string(), 0, std::string("no usable design: ") + e.what());
                }
            }
            else
            {
                if (!config.switch_positions || !config.hardwire_bits)
                    throw ConfigError("a design is required: pass --design <result.json> or set switch_positions and "
                                      "hardwire_bits");
                set.switch_positions = *config.switch_positions;
                set.hardwire = *config.hardwire_bits;
            }
            if (set.hardwire.size() != q)
                throw ConfigError("design has " + std::to_string(set.hardwire.size()) + " hardwire bits, network has " +
                                  std::to_string(q) + " internal ports");
            std::sort(set.switch_positions.begin(), set.switch_positions.end());
            impm::PixelConfiguration probe{set.hardwire, set.switch_positions,
                                           std::vector<std::uint8_t>(set.switch_positions.size(), 0)};
            try
            {
                probe.validate();
            }
            catch (const InvalidArgument &e)
            {
                throw ConfigError(std::string("invalid design: ") + e.what());
            }
            for (std::size_t s : set.switch_positions)
                set.hardwire[s - 1] = 0;
            return set;
        }
    }

    RunConfig resolve_config(const CommandOptions &options)
    {
        if (options.config_path.empty())
            throw ConfigError("--config <path> is required");
        RunConfig config = load_config(options.config_path);
        if (options.seed)
            config.seed = *options.seed;
        if (options.threads)
        {
            if (*options.threads == 0)
                throw ConfigError("--threads must be at least 1");
            config.threads = *options.threads;
        }
        if (options.budget)
        {
            if (*options.budget == 0)
                throw ConfigError("--budget must be at least 1");
            config.budget = *options.budget;
        }
        if (options.target_matched_sets)
        {
            if (*options.target_matched_sets == 0)
                throw ConfigError("--target-matched-sets must be at least 1");
            config.target_matched_sets = *options.target_matched_sets;
        }
        config.ga.seed = config.seed;
        config.validate();
        return config;
    }

    search::Problem build_problem(const RunConfig &config)
    {
        if (config.mode == InputMode::dipole)
            throw ConfigError("dipole mode has no circuit model");
        const em::FrequencyGrid freqs(config.f_lower_hz, config.f_upper_hz, config.frequency_samples);
        search::Problem problem;
        problem.switch_model = *config.switch_model;
        problem.z0_ohm = config.z0_ohm;
        problem.pas.support = config.pas_support;

        if (config.mode == InputMode::surrogate)
        {
            const auto grid = numerics::build_quadrature(config.pas_support, config.resolution);
            const auto layout = em::make_pixel_layout(config.internal_ports, config.pixel_pitch_m);
            auto s = em::synth_pixel_surrogate(layout, config.surrogate_seed_or_master(), config.surrogate, freqs, grid);
            problem.network = std::move(s.network);
            problem.patterns = std::move(s.patterns);
            return problem;
        }

        const auto loaded = em::load_network(config.network_path);
        const auto bundle = em::load_pattern_bundle(config.pattern_dir);
        try
        {
            em::check_compatible(loaded.network, bundle);
        }
        catch (const InvalidArgument &e)
        {
            throw ConfigError(e.what());
        }
        std::vector<double> f;
        std::vector<numerics::ComplexMatrix> z;
        std::vector<std::size_t> pattern_index;
        for (double ft : freqs.samples())
        {
            std::size_t t = 0;
            try
            {
                t = loaded.network.frequency_index(ft);
            }
            catch (const InvalidArgument &)
            {
                throw ConfigError("network file has no sample at design frequency " + em::format_double(ft) + " Hz");
            }
            f.push_back(loaded.network.frequencies()[t]);
            z.push_back(loaded.network.z(t));
            const auto &pf = bundle.frequencies();
            const auto it = std::find_if(pf.begin(), pf.end(), [&](double g) { return std::abs(g - f.back()) <= 1e-9 * g; });
            pattern_index.push_back(std::size_t(it - pf.begin()));
        }
        problem.network = em::MultiportNetwork(f, std::move(z));
        problem.patterns = em::PatternGrid(bundle.grid(), f, bundle.ports());
        for (std::size_t t = 0; t < f.size(); ++t)
            for (std::size_t p = 0; p < bundle.ports(); ++p)
            {
                const auto src = bundle.port(pattern_index[t], p);
                std::copy(src.begin(), src.end(), problem.patterns.port(t, p).begin());
            }
        return problem;
    }

    int cmd_synth(const CommandOptions &options, std::ostream &log)
    {
        const RunConfig config = resolve_config(options);
        require_out_dir(options.out_dir);
        if (config.mode != InputMode::surrogate)
            throw ConfigError("synth needs mode = surrogate");
        const auto problem = build_problem(config);
        const fs::path network = options.out_dir / "network.zmat";
        const fs::path bundle = options.out_dir / "patterns";
        fs::create_directories(bundle);
        em::write_network(network, problem.network);
        em::write_pattern_bundle(bundle, problem.patterns);

        Manifest manifest("synth", config, options);
        manifest.add_output(network);
        for (std::size_t t = 0; t <= problem.patterns.frequency_count(); ++t)
            manifest.add_output(t == 0 ? bundle / "manifest.json" : bundle / ("pattern_f" + std::to_string(t) + ".csv"));
        manifest.write(options.out_dir);
        log << "wrote " << network.string() << " and " << bundle.string() << '\n';
        return exit_code::ok;
    }

    int cmd_search(const CommandOptions &options, std::ostream &log)
    {
        const RunConfig config = resolve_config(options);
        require_out_dir(options.out_dir);
        if (config.mode == InputMode::dipole)
            throw ConfigError("search needs a circuit model (mode = surrogate or files)");
        const auto problem = build_problem(config);
        const auto params = pipeline_params(config);
        const auto found = search::random_matched_search(problem, params.search);

        Manifest manifest("search", config, options);
        json j = common_header("search", config, problem.network.frequencies());
        j["status"] = found.exhausted() ? "no_solution" : "ok";
        json sets = json::array();
        std::vector<search::StateResponse> all;
        std::vector<std::size_t> labels;
        for (std::size_t i = 0; i < found.sets.size(); ++i)
        {
            const auto &s = found.sets[i];
            sets.push_back({{"candidate_index", s.candidate_index},
                            {"switch_positions", s.parent.switch_positions},
                            {"hardwire_bits", bit_string(s.parent.hardwire)},
                            {"matched_states", s.m()},
                            {"members", reflection_json(s.members)}});
            for (const auto &m : s.members)
            {
                all.push_back(m);
                labels.push_back(i + 1);
            }
        }
        j["matched_sets"] = sets;
        j["search_stats"] = stats_json(found.stats);
        json files = json::array();
        if (!found.exhausted())
        {
            write_reflection_csv(options.out_dir / "reflection.csv", all, problem.network.frequencies(), {}, labels);
            manifest.add_output(options.out_dir / "reflection.csv");
            files.push_back("reflection.csv");
        }
        j["files"] = files;
        write_json(options.out_dir / "result.json", j);
        manifest.add_output(options.out_dir / "result.json");
        manifest.write(options.out_dir);
        log << found.sets.size() << " matched sets from " << found.stats.sets_tried << " candidates\n";
        return found.exhausted() ? exit_code::no_solution : exit_code::ok;
    }

    namespace
    {
        int run_dipole(const std::string &command, const RunConfig &config, const CommandOptions &options,
                       std::ostream &log)
        {
            const auto grid = numerics::build_quadrature(config.pas_support, config.resolution);
            const auto patterns = em::synth_dipole_translations(config.fas_ports, config.aperture_wavelengths, grid);
            em::PowerAngularSpectrum pas;
            pas.support = config.pas_support;
            const auto kernel = pcdm::compute_kernel(patterns, pas);
            std::vector<numerics::ComplexMatrix> currents(
                kernel.k.size(), numerics::ComplexMatrix::identity(config.fas_ports));
            auto params = pipeline_params(config);
            const auto run = search::order_injected_states(kernel, currents, params);
            return emit_run(command, config, options, run, patterns.frequencies(), log);
        }
    }

    int cmd_run(const CommandOptions &options, std::ostream &log)
    {
        const RunConfig config = resolve_config(options);
        require_out_dir(options.out_dir);
        if (config.mode == InputMode::dipole)
            return run_dipole("run", config, options, log);
        const auto problem = build_problem(config);
        const auto run = search::two_step_pipeline(problem, pipeline_params(config));
        return emit_run("run", config, options, run, problem.network.frequencies(), log);
    }

    int cmd_order(const CommandOptions &options, std::ostream &log)
    {
        const RunConfig config = resolve_config(options);
        require_out_dir(options.out_dir);
        if (config.mode == InputMode::dipole)
            return run_dipole("order", config, options, log);
        const auto problem = build_problem(config);
        const auto set = design_from(config, options, problem.internal_ports());
        const auto run = search::order_state_set(problem, set, pipeline_params(config));
        return emit_run("order", config, options, run, problem.network.frequencies(), log);
    }

    int cmd_eval(const CommandOptions &options, std::ostream &log)
    {
        const RunConfig config = resolve_config(options);
        require_out_dir(options.out_dir);
        if (config.mode == InputMode::dipole)
            throw ConfigError("eval needs a pixel design (mode = surrogate or files)");
        if (options.state_table.empty())
            throw ConfigError("--state-table <path> is required");
        const auto problem = build_problem(config);
        const auto set = design_from(config, options, problem.internal_ports());
        const auto table = read_state_table(options.state_table);
        const std::string src = options.state_table.string();

        // Map table columns onto the design's switch positions.
        std::vector<std::size_t> column_of(set.switch_positions.size(), SIZE_MAX);
        for (std::size_t k = 0; k < table.switch_positions.size(); ++k)
        {
            const auto it = std::find(set.switch_positions.begin(), set.switch_positions.end(), table.switch_positions[k]);
            if (it == set.switch_positions.end())
                throw ParseError(src, 1, "column sw_" + std::to_string(table.switch_positions[k]) +
                                             " refers to port " + std::to_string(table.switch_positions[k]) +
                                             ", which is not a switch position of the design");
            column_of[std::size_t(it - set.switch_positions.begin())] = k;
        }
        for (std::size_t p = 0; p < column_of.size(); ++p)
            if (column_of[p] == SIZE_MAX)
                throw ParseError(src, 1, "no column for switch position " + std::to_string(set.switch_positions[p]));

        const std::size_t n = table.ports.size();
        if (n != config.fas_ports)
            throw ParseError(src, 0, "state table lists " + std::to_string(n) + " ports, configuration expects " +
                                         std::to_string(config.fas_ports));
        std::vector<std::uint64_t> state_of_port(n);
        std::vector<bool> port_seen(n, false);
        for (std::size_t r = 0; r < n; ++r)
        {
            const std::size_t port = table.ports[r];
            if (port < 1 || port > n || port_seen[port - 1])
                throw ParseError(src, r + 2, "ports must list 1.." + std::to_string(n) + " once each");
            port_seen[port - 1] = true;
            std::uint64_t state = 0;
            for (std::size_t p = 0; p < column_of.size(); ++p)
                state |= std::uint64_t(table.bits[r][column_of[p]]) << p;
            state_of_port[port - 1] = state;
        }

        std::vector<std::uint64_t> distinct = state_of_port;
        std::sort(distinct.begin(), distinct.end());
        if (std::adjacent_find(distinct.begin(), distinct.end()) != distinct.end())
            throw ParseError(src, 0, "state table assigns the same switch state to two ports");

        std::vector<search::StateResponse> members;
        for (auto s : distinct)
        {
            auto r = search::evaluate_state(problem, set.state(s));
            if (r.singular)
                throw SingularMatrixError(set.state(s).id(), 0.0);
            members.push_back(std::move(r));
        }
        search::PortOrdering ordering(n);
        for (std::size_t p = 0; p < n; ++p)
            ordering[p] = std::size_t(std::lower_bound(distinct.begin(), distinct.end(), state_of_port[p]) -
                                      distinct.begin()) + 1;

        const auto kernel = pcdm::compute_kernel(problem.patterns, problem.pas);
        const auto rho = search::state_covariance(kernel, members);
        const auto target = pcdm::target_covariance(config.fas_ports, config.aperture_wavelengths);
        const double error = pcdm::average_error(rho, target, ordering);
        std::vector<numerics::RealMatrix> selected;
        for (const auto &c : rho)
            selected.push_back(pcdm::select(c.rho, ordering));

        const auto &freqs = problem.network.frequencies();
        Manifest manifest("eval", config, options);
        json j = common_header("eval", config, freqs);
        const bool all_matched = std::all_of(members.begin(), members.end(), [](const auto &m) { return m.matched(); });
        j["status"] = "ok";
        j["delta_e"] = error;
        j["all_states_matched"] = all_matched;
        j["design"] = {{"switch_positions", set.switch_positions}, {"hardwire_bits", bit_string(set.hardwire)}};
        j["state_indices_by_port"] = state_of_port;
        j["reflection"] = reflection_json(members);
        json files = json::array();
        write_covariance_files(options.out_dir, selected, target, manifest, files);
        std::map<std::uint64_t, std::size_t> port_of;
        for (std::size_t p = 0; p < n; ++p)
            port_of[state_of_port[p]] = p + 1;
        write_reflection_csv(options.out_dir / "reflection.csv", members, freqs, port_of);
        manifest.add_output(options.out_dir / "reflection.csv");
        files.push_back("reflection.csv");
        j["files"] = files;
        write_json(options.out_dir / "result.json", j);
        manifest.add_output(options.out_dir / "result.json");
        manifest.write(options.out_dir);
        log << "delta_e = " << em::format_double(error) << (all_matched ? "" : " (some states are not matched)") << '\n';
        return exit_code::ok;
    }

    int report_failure(std::exception_ptr error, std::ostream &err)
    {
        try
        {
            std::rethrow_exception(error);
        }
        catch (const ConfigError &e)
        {
            err << "configuration error: " << e.what() << '\n';
            return exit_code::usage;
        }
        catch (const ParseError &e)
        {
            err << "parse error: " << e.what() << '\n';
            return exit_code::parse;
        }
        catch (const SingularMatrixError &e)
        {
            err << "numeric error: " << e.what() << '\n';
            return exit_code::numeric;
        }
        catch (const DegenerateStateError &e)
        {
            err << "numeric error: " << e.what() << '\n';
            return exit_code::numeric;
        }
        catch (const InvalidArgument &e)
        {
            err << "invalid input: " << e.what() << '\n';
            return exit_code::usage;
        }
        catch (const LimitExceeded &e)
        {
            err << "limit exceeded: " << e.what() << '\n';
            return exit_code::usage;
        }
        catch (const std::exception &e)
        {
            err << "error: " << e.what() << '\n';
            return exit_code::internal;
        }
        catch (...)
        {
            err << "error: unknown failure\n";
            return exit_code::internal;
        }
    }
}
