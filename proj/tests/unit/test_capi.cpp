#include "doctest.h"

#include "cyclogcd/cyclogcd.h"

#include "json.hpp"

#include <functional>
#include <memory>
#include <sstream>
#include <string>

using nlohmann::json;

namespace {

struct SessionDeleter {
  void operator()(cg_session* s) const { cg_session_destroy(s); }
};
using Session = std::unique_ptr<cg_session, SessionDeleter>;

template <class Args, class Fn>
std::string run_ok(cg_session* s, Fn fn, const Args& args, cg_format fmt = CG_FORMAT_JSON) {
  cg_report* r = nullptr;
  const cg_status st = fn(s, &args, fmt, &r);
  INFO(cg_session_last_error(s));
  REQUIRE(st == CG_OK);
  std::string text(cg_report_data(r), cg_report_size(r));
  cg_report_destroy(r);
  return text;
}

template <class Args, class Fn>
cg_status run_status(cg_session* s, Fn fn, const Args& args) {
  cg_report* r = nullptr;
  const cg_status st = fn(s, &args, CG_FORMAT_JSON, &r);
  cg_report_destroy(r);
  return st;
}

cg_ff_args ff_args(int verify) { return cg_ff_args{2, 1, 1, 3, 0, "0,1", "1,1", 1, 4, verify, 5000}; }

}  // namespace

TEST_CASE("sessions and primitives") {
  Session s(cg_session_create(3));
  CHECK(cg_session_threads(s.get()) == 3);
  cg_session_set_threads(s.get(), 1);
  CHECK(cg_session_threads(s.get()) == 1);
  CHECK(std::string(cg_version()) == "0.1.0");
  uint64_t v = 0;
  CHECK(cg_euler_phi(s.get(), 36, &v) == CG_OK);
  CHECK(v == 12);
  CHECK(cg_mult_order(s.get(), 2, 7, &v) == CG_OK);
  CHECK(v == 3);
  CHECK(cg_delta_count(s.get(), 12, &v) == CG_OK);
  CHECK(v == 5);
  int flag = -1;
  CHECK(cg_is_lth_power_mod(s.get(), 2, 2, 7, &flag) == CG_OK);
  CHECK(flag == 1);
  CHECK(cg_is_lth_power_mod(s.get(), 2, 5, 7, &flag) == CG_ERR_INVALID_ARGUMENT);
  CHECK(std::string(cg_session_last_error(s.get())).find("does not divide") != std::string::npos);
  CHECK(cg_euler_phi(s.get(), 0, &v) == CG_ERR_INVALID_ARGUMENT);
  CHECK(cg_euler_phi(s.get(), 5, nullptr) == CG_ERR_INVALID_ARGUMENT);
  CHECK(cg_euler_phi(nullptr, 5, &v) == CG_ERR_INVALID_ARGUMENT);
  CHECK(cg_euler_phi(s.get(), 5, &v) == CG_OK);
  CHECK(std::string(cg_session_last_error(s.get())).empty());
  CHECK(std::string(cg_status_name(CG_ERR_HYPOTHESIS)) == "hypothesis violation");
}

TEST_CASE("status codes for rejected configurations") {
  Session s(cg_session_create(1));
  const cg_champion_args squared{4, 3, 2, 0, 1000, 0.9, 1.0};
  CHECK(run_status(s.get(), cg_run_champion, squared) == CG_ERR_HYPOTHESIS);
  CHECK(std::string(cg_session_last_error(s.get())).find("l-th power") != std::string::npos);
  const cg_champion_args bad_delta{2, 3, 2, 0, 1000, 1.5, 1.0};
  CHECK(run_status(s.get(), cg_run_champion, bad_delta) == CG_ERR_INVALID_ARGUMENT);
  const cg_lemma_args not_coprime{2, 2, 3, 1000, 20};
  CHECK(run_status(s.get(), cg_run_verify_lemma, not_coprime) == CG_ERR_HYPOTHESIS);
  const cg_monitor_args dependent{2, 8, 1, 10};
  CHECK(run_status(s.get(), cg_run_monitor, dependent) == CG_ERR_HYPOTHESIS);
  cg_ff_args bad_poly = ff_args(0);
  bad_poly.a_poly = "1,,1";
  CHECK(run_status(s.get(), cg_run_ff, bad_poly) == CG_ERR_INVALID_ARGUMENT);
  cg_ff_args cap = ff_args(1);
  cap.n_cap = 10;
  CHECK(run_status(s.get(), cg_run_ff, cap) == CG_ERR_INVALID_ARGUMENT);
  cg_report* r = nullptr;
  CHECK(cg_run_delta(s.get(), nullptr, CG_FORMAT_JSON, &r) == CG_ERR_INVALID_ARGUMENT);
  const cg_delta_args d{10, 0};
  CHECK(cg_run_delta(s.get(), &d, CG_FORMAT_JSON, nullptr) == CG_ERR_INVALID_ARGUMENT);
  CHECK(cg_run_delta(s.get(), &d, static_cast<cg_format>(9), &r) == CG_ERR_INVALID_ARGUMENT);
  CHECK(r == nullptr);
}

TEST_CASE("gcd-seq CSV rows") {
  Session s(cg_session_create(1));
  const std::string csv = run_ok(s.get(), cg_run_gcd_seq, cg_gcd_seq_args{2, 3, 1, 1, 4}, CG_FORMAT_CSV);
  std::istringstream in(csv);
  std::string line;
  std::vector<std::string> data;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') data.push_back(line);
  REQUIRE(data.size() == 5);
  CHECK(data[0] == "n,gcd,log_gcd,distinct_prime_count");
  CHECK(data[1].rfind("1,1,", 0) == 0);
  CHECK(data[3].rfind("3,1,", 0) == 0);
  CHECK(data[4].rfind("4,5,", 0) == 0);
}

TEST_CASE("report envelopes and schemas") {
  Session s(cg_session_create(1));
  const json champion = json::parse(run_ok(s.get(), cg_run_champion, cg_champion_args{2, 3, 2, 0, 3000, 0.9, 1.0}));
  for (const char* key : {"n", "representation_count", "distinct_primes", "log_gcd_lower_bound", "pigeonhole_floor",
                          "curve_ratio", "config", "version", "verification"})
    CHECK(champion.contains(key));
  CHECK(champion["verification"]["status"] == "verified");
  CHECK(champion["config"]["x"] == 3000);
  CHECK(champion["distinct_primes"].size() == champion["representation_count"].get<std::size_t>());

  const json density = json::parse(run_ok(s.get(), cg_run_density, cg_density_args{2, 1, 2, 3, 100000}));
  for (const char* key : {"N", "d", "e_i", "ratio", "count", "expected", "relative_error"}) CHECK(density.contains(key));
  CHECK(density["ratio"] == "1/8");
  CHECK(density["ratio_decimal"] == 0.125);
  CHECK(density["e_i"] == json::array({3}));

  const json ff = json::parse(run_ok(s.get(), cg_run_ff, ff_args(1)));
  CHECK(ff["r"] == 1);
  CHECK(ff["t"] == 2);
  CHECK(ff["Q"] == 4);
  REQUIRE(ff["per_N"].size() == 4);
  for (const auto& row : ff["per_N"])
    for (const char* key : {"N", "n", "pi_count", "predicted", "deg_gcd", "certified_bound"}) CHECK(row.contains(key));
  CHECK(ff["per_N"][3]["n"] == "85");
  const json ff_plain = json::parse(run_ok(s.get(), cg_run_ff, ff_args(0)));
  CHECK_FALSE(ff_plain["per_N"][0].contains("deg_gcd"));
  CHECK(ff_plain["subcommand"] == "ff");
}

TEST_CASE("JSON output has sorted keys at every level") {
  Session s(cg_session_create(1));
  const std::string text = run_ok(s.get(), cg_run_ff, ff_args(1));
  std::function<void(const json&)> check = [&](const json& j) {
    if (j.is_object()) {
      std::string prev;
      for (auto it = j.begin(); it != j.end(); ++it) {
        CHECK(prev < it.key());
        prev = it.key();
        check(it.value());
      }
    } else if (j.is_array()) {
      for (const auto& v : j) check(v);
    }
  };
  check(json::parse(text));
  CHECK(json::parse(text).dump(2) + "\n" == text);
}

TEST_CASE("reports do not depend on the thread count") {
  Session one(cg_session_create(1)), many(cg_session_create(6));
  CHECK(run_ok(one.get(), cg_run_champion, cg_champion_args{2, 3, 2, 0, 3000, 0.9, 1.0}) ==
        run_ok(many.get(), cg_run_champion, cg_champion_args{2, 3, 2, 0, 3000, 0.9, 1.0}));
  CHECK(run_ok(one.get(), cg_run_delta, cg_delta_args{2000, 1}, CG_FORMAT_CSV) ==
        run_ok(many.get(), cg_run_delta, cg_delta_args{2000, 1}, CG_FORMAT_CSV));
  CHECK(run_ok(one.get(), cg_run_ff, ff_args(1)) == run_ok(many.get(), cg_run_ff, ff_args(1)));
}
