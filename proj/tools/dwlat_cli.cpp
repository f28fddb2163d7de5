// dwlat: command-line front end over the C interface.
//
// Exit codes: 0 ok, 1 usage, 2 domain error, 3 verification mismatch.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dwlat/dwlat.h"

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kDomain = 2;
constexpr int kMismatch = 3;

struct Failure {
  int exit_code;
  std::string message;
};

struct DiagramDeleter {
  void operator()(dwlat_diagram* d) const { dwlat_diagram_destroy(d); }
};
struct WeightDeleter {
  void operator()(dwlat_weight* w) const { dwlat_weight_destroy(w); }
};
struct StringDeleter {
  void operator()(char* s) const { dwlat_string_free(s); }
};
using Diagram = std::unique_ptr<dwlat_diagram, DiagramDeleter>;
using WeightPtr = std::unique_ptr<dwlat_weight, WeightDeleter>;
using Text = std::unique_ptr<char, StringDeleter>;

[[noreturn]] void raise(dwlat_status s) {
  const int code = s == DWLAT_E_PREDICTION_MISMATCH ? kMismatch : s == DWLAT_E_PARSE || s == DWLAT_E_UNKNOWN_TYPE || s == DWLAT_E_INDEX ? kUsage : kDomain;
  throw Failure{code, std::string(dwlat_status_name(s)) + ": " + dwlat_last_error()};
}

void check(dwlat_status s) {
  if (s != DWLAT_OK) raise(s);
}

Diagram open(const std::string& type) {
  dwlat_diagram* d = nullptr;
  check(dwlat_diagram_create(type.c_str(), &d));
  return Diagram(d);
}

std::vector<std::int64_t> parse_list(const std::string& text, const char* what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Failure{kUsage, std::string("bad ") + what + " '" + text + "': expected comma-separated integers"};
    }
  }
  if (out.empty()) throw Failure{kUsage, std::string("empty ") + what};
  return out;
}

// "l0,l1,...[|p/q]"; an explicit shift argument overrides the suffix.
WeightPtr weight(const Diagram& d, const std::string& spec, const std::optional<std::string>& shift = std::nullopt) {
  std::string labels = spec;
  std::string suffix = "0";
  if (const auto bar = spec.find('|'); bar != std::string::npos) {
    labels = spec.substr(0, bar);
    suffix = spec.substr(bar + 1);
  }
  const auto k = parse_list(labels, "labels");
  const std::string s = shift.value_or(suffix);
  dwlat_weight* w = nullptr;
  check(dwlat_weight_create(d.get(), k.data(), k.size(), s.c_str(), &w));
  return WeightPtr(w);
}

void emit(char* raw) {
  Text t(raw);
  std::cout << t.get();
}

dwlat_format format_of(const std::string& f) { return f == "dot" ? DWLAT_FORMAT_DOT : DWLAT_FORMAT_JSON; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dominant weight posets of affine Kac-Moody algebras"};
  app.require_subcommand(1);

  std::string type, labels, top, bottom, mu, mu2, format = "json";
  std::optional<std::string> shift;
  int max_rank = 12;

  auto* info = app.add_subcommand("info", "Cartan matrix, marks, comarks, delta, c, special vertices");
  info->add_option("type", type, "type id, e.g. A3-1")->required();

  auto* types = app.add_subcommand("types", "List catalog type ids");
  types->add_option("--max-rank", max_rank, "largest rank listed")->check(CLI::Range(1, 40));

  auto* cocov = app.add_subcommand("cocovers", "Weights covered by a dominant weight");
  auto* cov = app.add_subcommand("covers", "Weights covering a dominant weight");
  for (auto* sub : {cocov, cov}) {
    sub->add_option("type", type, "type id")->required();
    sub->add_option("--labels", labels, "comma-separated labels by vertex, optionally |p/q")->required();
    sub->add_option("--shift", shift, "delta coefficient p/q (default 0)");
  }

  auto* interval = app.add_subcommand("interval", "Hasse diagram of [bottom, top]");
  interval->add_option("type", type, "type id")->required();
  interval->add_option("--top", top, "labels[|shift] of the upper end")->required();
  interval->add_option("--bottom", bottom, "labels[|shift] of the lower end")->required();
  interval->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

  auto* cell = app.add_subcommand("cell", "Basic cell spanned by two cocovers (type A_n^(1))");
  cell->add_option("type", type, "type id")->required();
  cell->add_option("--top", top, "labels[|shift] of lambda")->required();
  cell->add_option("--mu", mu, "labels[|shift] of the first cocover")->required();
  cell->add_option("--mu2", mu2, "labels[|shift] of the second cocover")->required();
  cell->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

  std::string levels = "1,2,3";
  std::size_t samples = 200, pairs = 20;
  std::uint64_t seed = 7;
  bool all_types = false;
  int verify_max_rank = 4;
  double budget_s = 60;
  auto* verify = app.add_subcommand("verify", "Compare the classification against brute force");
  verify->add_option("type", type, "type id (omit with --all-types)");
  verify->add_option("--levels", levels, "comma-separated levels");
  verify->add_option("--samples", samples, "seeded samples per level");
  verify->add_option("--pairs", pairs, "seeded meet/join pairs per level");
  verify->add_option("--seed", seed, "sampling seed");
  verify->add_flag("--all-types", all_types, "run over the catalog up to --max-rank");
  verify->add_option("--max-rank", verify_max_rank, "catalog bound for --all-types")->check(CLI::Range(1, 40));
  verify->add_option("--budget", budget_s, "per-type time budget in seconds (reported, not enforced)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*types) {
      char* out = nullptr;
      check(dwlat_types(max_rank, &out));
      emit(out);
    } else if (*info) {
      const Diagram d = open(type);
      char* out = nullptr;
      check(dwlat_diagram_info(d.get(), &out));
      emit(out);
    } else if (*cocov || *cov) {
      const Diagram d = open(type);
      const WeightPtr w = weight(d, labels, shift);
      char* out = nullptr;
      check(*cocov ? dwlat_cocovers(d.get(), w.get(), &out) : dwlat_covers(d.get(), w.get(), &out));
      emit(out);
    } else if (*interval) {
      const Diagram d = open(type);
      const WeightPtr t = weight(d, top), b = weight(d, bottom);
      char* out = nullptr;
      check(dwlat_interval(d.get(), t.get(), b.get(), format_of(format), &out));
      emit(out);
    } else if (*cell) {
      const Diagram d = open(type);
      const WeightPtr t = weight(d, top), m1 = weight(d, mu), m2 = weight(d, mu2);
      char* out = nullptr;
      const dwlat_status s = dwlat_cell(d.get(), t.get(), m1.get(), m2.get(), format_of(format), &out);
      if (out != nullptr) emit(out);
      check(s);
    } else if (*verify) {
      if (all_types == !type.empty()) throw Failure{kUsage, "verify needs exactly one of <type> or --all-types"};
      const auto lv = parse_list(levels, "levels");
      std::vector<std::string> ids;
      if (all_types) {
        char* out = nullptr;
        check(dwlat_types(verify_max_rank, &out));
        Text t(out);
        for (const auto& id : nlohmann::json::parse(t.get())) ids.push_back(id.get<std::string>());
      } else {
        ids.push_back(type);
      }
      bool ok = true;
      nlohmann::ordered_json all = nlohmann::ordered_json::array();
      for (const auto& id : ids) {
        const Diagram d = open(id);
        const auto start = std::chrono::steady_clock::now();
        char* out = nullptr;
        int passed = 0;
        check(dwlat_verify(d.get(), lv.data(), lv.size(), samples, seed, pairs, &out, &passed));
        Text t(out);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        ok = ok && passed != 0;
        if (!all_types) {
          std::cout << t.get();
          continue;
        }
        auto rep = nlohmann::ordered_json::parse(t.get());
        if (secs > budget_s) {
          rep["budget_exceeded"] = true;
          std::cerr << id << ": exceeded the " << budget_s << " s budget (" << secs << " s)\n";
        }
        all.push_back(std::move(rep));
      }
      if (all_types) std::cout << all.dump(2) << "\n";
      if (!ok) {
        std::cerr << "verification found mismatches\n";
        return kMismatch;
      }
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.exit_code;
  }
  return kOk;
}
