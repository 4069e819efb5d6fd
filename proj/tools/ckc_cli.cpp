// Command-line front end. Links against the C API only; all numeric JSON
// output is rounded to 12 significant digits before serialization.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ckc.h"
#include "json.hpp"

using nlohmann::json;

namespace {

// Round to 12 significant digits so serialized JSON carries no more.
double r12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::strtod(buf, nullptr);
}

[[noreturn]] void die(ckc_status status) {
    json record = {{"error", ckc_status_name(status)}, {"message", ckc_last_error()}};
    std::cerr << record.dump() << "\n";
    std::exit(static_cast<int>(status));
}

void check(ckc_status status) {
    if (status != CKC_OK) die(status);
}

[[noreturn]] void die_cli(const std::string& name, const std::string& message) {
    json record = {{"error", name}, {"message", message}};
    std::cerr << record.dump() << "\n";
    std::exit(2);
}

struct MatrixHandle {
    ckc_matrix* m = nullptr;
    ~MatrixHandle() { ckc_matrix_free(m); }
};

struct GraphHandle {
    ckc_graph* g = nullptr;
    ~GraphHandle() { ckc_graph_free(g); }
};

struct IntArray {
    int* p = nullptr;
    int n = 0;
    ~IntArray() { ckc_ints_free(p); }
};

struct DoubleArray {
    double* p = nullptr;
    ~DoubleArray() { ckc_doubles_free(p); }
};

int mu_mode_code(const std::string& name) {
    if (name == "zero") return 0;
    if (name == "per-sample") return 1;
    if (name == "per-feature") return 2;
    die_cli("OutOfDomain", "mu-mode must be zero, per-sample, or per-feature");
}

std::vector<int> load_event_years(const std::string& path) {
    std::ifstream in(path);
    if (!in) die_cli("IoError", "cannot open " + path);
    std::string line;
    if (!std::getline(in, line) || (line != "year" && line != "year\r"))
        die_cli("ParseError", path + ": expected header 'year'");
    std::vector<int> years;
    int row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            size_t used = 0;
            years.push_back(std::stoi(line, &used));
            if (used != line.size()) throw std::invalid_argument(line);
        } catch (const std::exception&) {
            die_cli("ParseError", path + ": row " + std::to_string(row) + ": not a year");
        }
    }
    return years;
}

int run_gen(const std::string& mode, int n, int m, int k_groups, double edge_prob, double w_lo,
            double w_hi, bool nonlinear, double noise_scale, const std::string& mu_mode,
            uint64_t seed, const std::string& out, const std::string& labels_out) {
    MatrixHandle samples;
    IntArray labels;
    if (mode == "chain") {
        check(ckc_gen_chain_vs_empty(n, m, w_lo, w_hi, nonlinear ? 1 : 0, noise_scale,
                                     mu_mode_code(mu_mode), seed, &samples.m, &labels.p,
                                     &labels.n));
    } else if (mode == "groups") {
        check(ckc_gen_benchmark_groups(k_groups, n, m, edge_prob, mu_mode_code(mu_mode),
                                       nonlinear ? 1 : 0, noise_scale, seed, &samples.m,
                                       &labels.p, &labels.n));
    } else {
        die_cli("OutOfDomain", "mode must be chain or groups");
    }
    check(ckc_samples_write_csv(out.c_str(), samples.m));
    if (!labels_out.empty()) check(ckc_labels_write_csv(labels_out.c_str(), labels.p, labels.n));
    json record = {{"samples", out},
                   {"rows", ckc_matrix_rows(samples.m)},
                   {"cols", ckc_matrix_cols(samples.m)}};
    if (!labels_out.empty()) record["labels"] = labels_out;
    std::cout << record.dump() << "\n";
    return 0;
}

int run_cluster(const std::string& input, int k, double nu, uint64_t seed, int max_iter,
                const std::string& out) {
    MatrixHandle samples;
    check(ckc_samples_load_csv(input.c_str(), &samples.m));
    IntArray labels;
    double inertia = 0.0;
    int iterations = 0;
    check(ckc_cluster_pipeline(samples.m, k, nu, seed, max_iter, &labels.p, &labels.n, &inertia,
                               &iterations));
    check(ckc_labels_write_csv(out.c_str(), labels.p, labels.n));
    json record = {{"labels", out},
                   {"k", k},
                   {"inertia", r12(inertia)},
                   {"iterations", iterations}};
    std::cout << record.dump() << "\n";
    return 0;
}

int run_kernel(const std::string& input, double nu, const std::string& out) {
    MatrixHandle samples, kernel;
    check(ckc_samples_load_csv(input.c_str(), &samples.m));
    check(ckc_kernel_matrix(samples.m, nu, &kernel.m));
    check(ckc_matrix_write_csv(out.c_str(), kernel.m));
    json record = {{"kernel", out}, {"n", ckc_matrix_rows(kernel.m)}};
    std::cout << record.dump() << "\n";
    return 0;
}

int run_decide(const std::string& input, double nu, int p, int q) {
    MatrixHandle samples;
    check(ckc_samples_load_csv(input.c_str(), &samples.m));
    const int m = ckc_matrix_cols(samples.m);
    auto emit = [&](int a, int b) {
        int verdict = 0;
        check(ckc_dependence_decision(samples.m, a, b, nu, &verdict));
        json record = {{"p", a}, {"q", b}, {"verdict", verdict ? "dependent" : "independent"}};
        std::cout << record.dump() << "\n";
    };
    if (p >= 0 && q >= 0) {
        emit(p, q);
    } else {
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b) emit(a, b);
    }
    return 0;
}

int run_graph(const std::string& graph_path, const std::string& other_path, int m_len) {
    GraphHandle g;
    check(ckc_graph_load_csv(graph_path.c_str(), -1, &g.g));
    IntArray pairs;
    check(ckc_m_connectivity(g.g, m_len, &pairs.p, &pairs.n));
    json pair_list = json::array();
    for (int i = 0; i < pairs.n; ++i)
        pair_list.push_back(json::array({pairs.p[2 * i], pairs.p[2 * i + 1]}));
    json record = {{"m", m_len}, {"pairs", pair_list}};
    if (!other_path.empty()) {
        GraphHandle other;
        check(ckc_graph_load_csv(other_path.c_str(), -1, &other.g));
        int eq = 0;
        check(ckc_graphs_equivalent(g.g, other.g, &eq));
        record["equivalent"] = eq != 0;
    }
    std::cout << record.dump() << "\n";
    return 0;
}

int run_metrics(const std::string& true_path, const std::string& pred_path, long tp, long tn,
                long fp, long fn, bool have_counts) {
    json record;
    if (!true_path.empty() || !pred_path.empty()) {
        if (true_path.empty() || pred_path.empty())
            die_cli("EmptyInput", "metrics needs both --true and --pred");
        IntArray truth, pred;
        check(ckc_labels_load_csv(true_path.c_str(), &truth.p, &truth.n));
        check(ckc_labels_load_csv(pred_path.c_str(), &pred.p, &pred.n));
        if (truth.n != pred.n) die_cli("LengthMismatch", "label files differ in length");
        double ari = 0.0, vm = 0.0;
        check(ckc_adjusted_rand_index(truth.p, pred.p, truth.n, &ari));
        check(ckc_v_measure(truth.p, pred.p, truth.n, &vm));
        record["ari"] = r12(ari);
        record["v_measure"] = r12(vm);
    }
    if (have_counts) {
        double accuracy = 0.0, recall = 0.0, f1 = 0.0;
        check(ckc_confusion_metrics(tp, tn, fp, fn, &accuracy, &recall, &f1));
        record["accuracy"] = r12(accuracy);
        record["recall"] = r12(recall);
        record["f1"] = r12(f1);
    }
    if (record.empty())
        die_cli("EmptyInput", "metrics needs --true/--pred or confusion counts");
    std::cout << record.dump() << "\n";
    return 0;
}

int run_earlywarn(const std::string& input, const std::string& west_group,
                  const std::string& east_group, const ckc_warn_config& config,
                  const std::string& events_path) {
    IntArray years, warned;
    DoubleArray yc_z;
    int n_years = 0;
    check(ckc_warning_pipeline_csv(input.c_str(), west_group.c_str(), east_group.c_str(), &config,
                                   &years.p, &yc_z.p, &n_years, &warned.p, &warned.n));
    std::set<int> warned_set(warned.p, warned.p + warned.n);
    for (int i = 0; i < n_years; ++i) {
        json record = {{"year", years.p[i]},
                       {"yc_z", r12(yc_z.p[i])},
                       {"warned", warned_set.count(years.p[i]) > 0}};
        std::cout << record.dump() << "\n";
    }
    for (int w : warned_set) {
        if (n_years > 0 && w > years.p[n_years - 1]) {
            json record = {{"year", w}, {"yc_z", nullptr}, {"warned", true}};
            std::cout << record.dump() << "\n";
        }
    }
    if (!events_path.empty()) {
        const auto events = load_event_years(events_path);
        std::set<int> event_set(events.begin(), events.end());
        std::set<int> all_years(years.p, years.p + n_years);
        for (int w : warned_set) all_years.insert(w);
        for (int e : event_set) all_years.insert(e);
        long tp = 0, tn = 0, fp = 0, fn = 0;
        for (int y : all_years) {
            const bool w = warned_set.count(y) > 0;
            const bool e = event_set.count(y) > 0;
            if (w && e) ++tp;
            else if (w) ++fp;
            else if (e) ++fn;
            else ++tn;
        }
        double accuracy = 0.0, recall = 0.0, f1 = 0.0;
        check(ckc_confusion_metrics(tp, tn, fp, fn, &accuracy, &recall, &f1));
        json record = {{"tp", tp},        {"tn", tn},
                       {"fp", fp},        {"fn", fn},
                       {"accuracy", r12(accuracy)}, {"recall", r12(recall)},
                       {"f1", r12(f1)}};
        std::cout << record.dump() << "\n";
    }
    return 0;
}

int run_stability(const std::string& features_path, const std::string& target_name,
                  const std::string& labels_path, int top_k) {
    MatrixHandle table;
    char** header = nullptr;
    int n_columns = 0;
    check(ckc_table_load_csv(features_path.c_str(), &table.m, &header, &n_columns));
    int target_col = -1;
    for (int c = 0; c < n_columns; ++c)
        if (target_name == header[c]) target_col = c;
    ckc_strings_free(header, n_columns);
    if (target_col < 0) die_cli("ParseError", "target column '" + target_name + "' not found");

    const int rows = ckc_matrix_rows(table.m);
    const int cols = ckc_matrix_cols(table.m);
    const double* data = ckc_matrix_data(table.m);
    std::vector<double> features(static_cast<size_t>(rows) * (cols - 1));
    std::vector<double> target(rows);
    for (int r = 0; r < rows; ++r) {
        int out_c = 0;
        for (int c = 0; c < cols; ++c) {
            const double v = data[static_cast<size_t>(r) * cols + c];
            if (c == target_col)
                target[r] = v;
            else
                features[static_cast<size_t>(r) * (cols - 1) + out_c++] = v;
        }
    }
    MatrixHandle x;
    check(ckc_matrix_create(rows, cols - 1, features.data(), &x.m));

    IntArray labels;
    check(ckc_labels_load_csv(labels_path.c_str(), &labels.p, &labels.n));
    if (labels.n != rows) die_cli("LengthMismatch", "labels do not match feature rows");

    IntArray order;
    DoubleArray variances;
    int n_features = 0;
    check(ckc_stability_ranking(x.m, target.data(), labels.p, &order.p, &variances.p,
                                &n_features));
    double rmse_train = 0.0, sta_error = 0.0;
    check(ckc_sta_error(x.m, target.data(), labels.p, top_k, &rmse_train, &sta_error));

    json order_list = json::array(), var_list = json::array();
    for (int i = 0; i < n_features; ++i) {
        order_list.push_back(order.p[i]);
        var_list.push_back(r12(variances.p[i]));
    }
    json record = {{"order", order_list},
                   {"variances", var_list},
                   {"top_k", top_k},
                   {"rmse_train", r12(rmse_train)},
                   {"sta_error", r12(sta_error)}};
    std::cout << record.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Causal kernel clustering pipelines"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate synthetic benchmark data");
    std::string gen_mode = "chain", gen_out, gen_labels_out, gen_mu = "per-sample";
    int gen_n = 50, gen_m = 5, gen_k_groups = 2;
    double gen_edge_prob = 0.4, gen_w_lo = 1.0, gen_w_hi = 2.0, gen_noise = 0.0;
    bool gen_nonlinear = false;
    uint64_t gen_seed = 0;
    gen->add_option("--mode", gen_mode, "chain (chain vs empty DAG) or groups (random DAGs)");
    gen->add_option("--n", gen_n, "samples per group");
    gen->add_option("--m", gen_m, "feature count");
    gen->add_option("--k-groups", gen_k_groups, "group count (groups mode)");
    gen->add_option("--edge-prob", gen_edge_prob, "edge probability (groups mode)");
    gen->add_option("--w-lo", gen_w_lo, "chain weight lower bound");
    gen->add_option("--w-hi", gen_w_hi, "chain weight upper bound");
    gen->add_flag("--nonlinear", gen_nonlinear, "tanh structural equations");
    gen->add_option("--noise-scale", gen_noise, "structural noise scale");
    gen->add_option("--mu-mode", gen_mu, "zero, per-sample, or per-feature");
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("--out", gen_out, "output samples CSV")->required();
    gen->add_option("--labels-out", gen_labels_out, "output labels CSV");

    // cluster
    auto* cluster = app.add_subcommand("cluster", "Kernel k-means on the causal kernel");
    std::string cl_input, cl_out;
    int cl_k = 2, cl_max_iter = 100;
    double cl_nu = 0.05;
    uint64_t cl_seed = 0;
    cluster->add_option("--input", cl_input, "samples CSV")->required();
    cluster->add_option("--k", cl_k, "cluster count")->required();
    cluster->add_option("--nu", cl_nu, "significance level");
    cluster->add_option("--seed", cl_seed, "random seed");
    cluster->add_option("--max-iter", cl_max_iter, "iteration cap");
    cluster->add_option("--out", cl_out, "output labels CSV")->required();

    // kernel
    auto* kernel = app.add_subcommand("kernel", "Write the causal kernel matrix");
    std::string ker_input, ker_out;
    double ker_nu = 0.05;
    kernel->add_option("--input", ker_input, "samples CSV")->required();
    kernel->add_option("--nu", ker_nu, "significance level");
    kernel->add_option("--out", ker_out, "output kernel CSV (header-less)")->required();

    // decide
    auto* decide = app.add_subcommand("decide", "Feature-pair dependence verdicts");
    std::string dec_input;
    double dec_nu = 0.05;
    int dec_p = -1, dec_q = -1;
    decide->add_option("--input", dec_input, "samples CSV")->required();
    decide->add_option("--nu", dec_nu, "significance level");
    decide->add_option("--p", dec_p, "first feature (default: all pairs)");
    decide->add_option("--q", dec_q, "second feature (default: all pairs)");

    // graph
    auto* graph = app.add_subcommand("graph", "m-connectivity and graph equivalence");
    std::string gr_path, gr_other;
    int gr_m = 1;
    graph->add_option("--graph", gr_path, "edge-list CSV")->required();
    graph->add_option("--other", gr_other, "second edge-list CSV for equivalence");
    graph->add_option("--m", gr_m, "path length");

    // metrics
    auto* metrics = app.add_subcommand("metrics", "Clustering and confusion metrics");
    std::string met_true, met_pred;
    long met_tp = 0, met_tn = 0, met_fp = 0, met_fn = 0;
    bool have_tp = false;
    auto* tp_opt = metrics->add_option("--tp", met_tp, "true positives");
    metrics->add_option("--tn", met_tn, "true negatives");
    metrics->add_option("--fp", met_fp, "false positives");
    metrics->add_option("--fn", met_fn, "false negatives");
    metrics->add_option("--true", met_true, "ground-truth labels CSV");
    metrics->add_option("--pred", met_pred, "predicted labels CSV");

    // earlywarn
    auto* earlywarn = app.add_subcommand("earlywarn", "Early-warning signal extraction");
    std::string ew_input, ew_west = "west", ew_east = "east", ew_events;
    ckc_warn_config ew_config;
    ckc_warn_config_default(&ew_config);
    earlywarn->add_option("--input", ew_input, "long-format CSV node_id,group,date,value")
        ->required();
    earlywarn->add_option("--west-group", ew_west, "group name of driving nodes");
    earlywarn->add_option("--east-group", ew_east, "group name of responding nodes");
    earlywarn->add_option("--window", ew_config.window_w, "window length");
    earlywarn->add_option("--embed-dim", ew_config.embed_dim, "delay-embedding dimension");
    earlywarn->add_option("--max-lag", ew_config.max_lag, "maximum lag");
    earlywarn->add_option("--lag-stride", ew_config.lag_stride, "lag grid stride");
    earlywarn->add_option("--t-stride", ew_config.t_stride, "time grid stride");
    earlywarn->add_option("--nu", ew_config.nu, "significance level");
    earlywarn->add_option("--tau", ew_config.tau, "warning threshold");
    earlywarn->add_option("--events", ew_events, "ground-truth event-year CSV (header 'year')");

    // stability
    auto* stability = app.add_subcommand("stability", "Stable-feature ranking and Sta_Error");
    std::string st_features, st_target, st_labels;
    int st_top_k = 3;
    stability->add_option("--features", st_features, "table CSV including the target column")
        ->required();
    stability->add_option("--target", st_target, "target column name")->required();
    stability->add_option("--labels", st_labels, "subgroup labels CSV")->required();
    stability->add_option("--top-k", st_top_k, "number of stable features to keep");

    CLI11_PARSE(app, argc, argv);

    if (gen->parsed())
        return run_gen(gen_mode, gen_n, gen_m, gen_k_groups, gen_edge_prob, gen_w_lo, gen_w_hi,
                       gen_nonlinear, gen_noise, gen_mu, gen_seed, gen_out, gen_labels_out);
    if (cluster->parsed()) return run_cluster(cl_input, cl_k, cl_nu, cl_seed, cl_max_iter, cl_out);
    if (kernel->parsed()) return run_kernel(ker_input, ker_nu, ker_out);
    if (decide->parsed()) return run_decide(dec_input, dec_nu, dec_p, dec_q);
    if (graph->parsed()) return run_graph(gr_path, gr_other, gr_m);
    if (metrics->parsed()) {
        have_tp = tp_opt->count() > 0;
        return run_metrics(met_true, met_pred, met_tp, met_tn, met_fp, met_fn, have_tp);
    }
    if (earlywarn->parsed()) return run_earlywarn(ew_input, ew_west, ew_east, ew_config, ew_events);
    if (stability->parsed()) return run_stability(st_features, st_target, st_labels, st_top_k);
    return 1;
}
