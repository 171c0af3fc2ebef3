#include "catan/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "catan/errors.hpp"

namespace catanrl {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

long parse_long(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const long x = std::stol(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("invalid integer for key '" + key + "': " + v);
    }
}

int parse_int(const std::string& key, const std::string& v) {
    return static_cast<int>(parse_long(key, v));
}

double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("invalid number for key '" + key + "': " + v);
    }
}

bool parse_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw ConfigError("invalid boolean for key '" + key + "': " + v);
}

std::string fmt_double(double x) {
    // Shortest representation that parses back to the same double.
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

} // namespace

void RunConfig::set(const std::string& key, const std::string& value) {
    // Network.
    if (key == "arch") network.arch = arch_from_string(value);
    else if (key == "layers") network.layers = parse_int(key, value);
    else if (key == "channels") network.channels = parse_int(key, value);
    else if (key == "scalars") network.scalars = parse_int(key, value);
    else if (key == "baseline_channels") network.baseline_channels = parse_int(key, value);
    else if (key == "leaky_slope") network.leaky_slope = parse_double(key, value);
    else if (key == "compat117") network.compat117 = parse_bool(key, value);
    // Trainer.
    else if (key == "seed") trainer.seed = static_cast<std::uint64_t>(parse_long(key, value));
    else if (key == "workers") trainer.workers = parse_int(key, value);
    else if (key == "games_per_worker") trainer.games_per_worker = parse_int(key, value);
    else if (key == "batch_size") trainer.batch_size = parse_int(key, value);
    else if (key == "batches_per_step") trainer.batches_per_step = parse_int(key, value);
    else if (key == "opponent_refresh_steps")
        trainer.opponent_refresh_steps = parse_int(key, value);
    else if (key == "lr0") trainer.lr0 = parse_double(key, value);
    else if (key == "lr_decay") trainer.lr_decay = parse_double(key, value);
    else if (key == "gamma") trainer.coeffs.gamma = parse_double(key, value);
    else if (key == "alpha_pi") trainer.coeffs.alpha_pi = parse_double(key, value);
    else if (key == "alpha_v") trainer.coeffs.alpha_v = parse_double(key, value);
    else if (key == "alpha_entropy") trainer.coeffs.alpha_entropy = parse_double(key, value);
    else if (key == "alpha_activity") trainer.coeffs.alpha_activity = parse_double(key, value);
    else if (key == "alpha_weight") trainer.coeffs.alpha_weight = parse_double(key, value);
    else if (key == "win_reward") trainer.win_reward = parse_double(key, value);
    else if (key == "vp_reward") trainer.vp_reward = parse_double(key, value);
    else if (key == "turn_cap") trainer.turn_cap = parse_int(key, value);
    else if (key == "train_steps") trainer.train_steps = parse_int(key, value);
    else if (key == "train_updates") trainer.train_updates = parse_long(key, value);
    else if (key == "staleness_bound") trainer.staleness_bound = parse_int(key, value);
    else if (key == "checkpoint_period_steps")
        trainer.checkpoint_period_steps = parse_int(key, value);
    else if (key == "eval_games") trainer.eval_games = parse_int(key, value);
    else if (key == "eval_period_steps") trainer.eval_period_steps = parse_int(key, value);
    else if (key == "threads") trainer.threads = parse_int(key, value);
    else if (key == "queue_capacity") trainer.queue_capacity = parse_int(key, value);
    else if (key == "no_activity_loss") trainer.no_activity_loss = parse_bool(key, value);
    else if (key == "fixed_opponent") trainer.fixed_opponent = parse_bool(key, value);
    else if (key == "fixed_opponent_path") trainer.fixed_opponent_path = value;
    else if (key == "resume_path") trainer.resume_path = value;
    else if (key == "checkpoint_dir") trainer.checkpoint_dir = value;
    else if (key == "metrics_file") trainer.metrics_path = value;
    // Paths.
    else if (key == "transcript_dir") transcript_dir = value;
    else throw ConfigError("unknown config key: '" + key + "'");
}

std::string RunConfig::echo() const {
    std::ostringstream os;
    os << "# effective configuration\n";
    os << "arch = " << arch_name(network.arch) << "\n";
    os << "layers = " << network.layers << "\n";
    os << "channels = " << network.channels << "\n";
    os << "scalars = " << network.scalars << "\n";
    os << "baseline_channels = " << network.baseline_channels << "\n";
    os << "leaky_slope = " << fmt_double(network.leaky_slope) << "\n";
    os << "compat117 = " << (network.compat117 ? "true" : "false") << "\n";
    os << "seed = " << trainer.seed << "\n";
    os << "workers = " << trainer.workers << "\n";
    os << "games_per_worker = " << trainer.games_per_worker << "\n";
    os << "batch_size = " << trainer.batch_size << "\n";
    os << "batches_per_step = " << trainer.batches_per_step << "\n";
    os << "opponent_refresh_steps = " << trainer.opponent_refresh_steps << "\n";
    os << "lr0 = " << fmt_double(trainer.lr0) << "\n";
    os << "lr_decay = " << fmt_double(trainer.lr_decay) << "\n";
    os << "gamma = " << fmt_double(trainer.coeffs.gamma) << "\n";
    os << "alpha_pi = " << fmt_double(trainer.coeffs.alpha_pi) << "\n";
    os << "alpha_v = " << fmt_double(trainer.coeffs.alpha_v) << "\n";
    os << "alpha_entropy = " << fmt_double(trainer.coeffs.alpha_entropy) << "\n";
    os << "alpha_activity = " << fmt_double(trainer.coeffs.alpha_activity) << "\n";
    os << "alpha_weight = " << fmt_double(trainer.coeffs.alpha_weight) << "\n";
    os << "win_reward = " << fmt_double(trainer.win_reward) << "\n";
    os << "vp_reward = " << fmt_double(trainer.vp_reward) << "\n";
    os << "turn_cap = " << trainer.turn_cap << "\n";
    os << "train_steps = " << trainer.train_steps << "\n";
    os << "train_updates = " << trainer.train_updates << "\n";
    os << "staleness_bound = " << trainer.staleness_bound << "\n";
    os << "checkpoint_period_steps = " << trainer.checkpoint_period_steps << "\n";
    os << "eval_games = " << trainer.eval_games << "\n";
    os << "eval_period_steps = " << trainer.eval_period_steps << "\n";
    os << "threads = " << trainer.threads << "\n";
    os << "queue_capacity = " << trainer.queue_capacity << "\n";
    os << "no_activity_loss = " << (trainer.no_activity_loss ? "true" : "false") << "\n";
    os << "fixed_opponent = " << (trainer.fixed_opponent ? "true" : "false") << "\n";
    if (!trainer.fixed_opponent_path.empty())
        os << "fixed_opponent_path = " << trainer.fixed_opponent_path << "\n";
    if (!trainer.resume_path.empty()) os << "resume_path = " << trainer.resume_path << "\n";
    os << "checkpoint_dir = " << trainer.checkpoint_dir << "\n";
    if (!trainer.metrics_path.empty()) os << "metrics_file = " << trainer.metrics_path << "\n";
    if (!transcript_dir.empty()) os << "transcript_dir = " << transcript_dir << "\n";
    return os.str();
}

RunConfig RunConfig::from_text(const std::string& text) {
    RunConfig cfg;
    std::istringstream is(text);
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty key");
        cfg.set(key, value);
    }
    return cfg;
}

RunConfig RunConfig::from_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << is.rdbuf();
    return from_text(buf.str());
}

} // namespace catanrl
