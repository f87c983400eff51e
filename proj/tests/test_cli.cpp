#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <memory>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run twc(const std::string &args) {
  const std::string cmd = std::string(TWC_BINARY) + " " + args + " 2>/dev/null";
  Run r;
  std::unique_ptr<FILE, int (*)(FILE *)> pipe(popen(cmd.c_str(), "r"), pclose);
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  for (std::size_t got; (got = fread(buf.data(), 1, buf.size(), pipe.get())) > 0;) r.out.append(buf.data(), got);
  const int status = pclose(pipe.release());
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json json_of(const Run &r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("machine output") {
  auto r = twc("graph --lambda 3,1 --json");
  CHECK(r.code == 0);
  CHECK(json_of(r)["targets"].size() == 2);

  r = twc("gamma expand --basis Qstar --index 3,1 --json");
  CHECK(r.code == 0);
  CHECK(json_of(r).contains("[3,1]"));

  r = twc("gamma eval --basis Qstar --index 2 --at 1 --json");
  CHECK(r.code == 0);
  CHECK(json_of(r) == "0");

  r = twc("sergeev character --lambda 3,1 --mu 3,1 --json");
  CHECK(r.code == 0);

  r = twc("sergeev class-sum --mu 3,1 -n 5 --json");
  CHECK(r.code == 0);
  CHECK(json_of(r).is_array());

  r = twc("sergeev idempotent --lambda 2 --json");
  CHECK(r.code == 0);
  CHECK(json_of(r).size() == 1);

  r = twc("center phi --alpha 3,1 --json");
  CHECK(r.code == 0);
  r = twc("center fock -n 4 --d 2 --json");
  CHECK(r.code == 0);
  // Repeated and zero subscripts are allowed.
  CHECK(twc("center fock -n 3 --d 2,0,0 --json").code == 0);
  CHECK(twc("center phi --d 2,2 --json").code == 0);
  r = twc("center idempotent-closure --lambda 2,1 --json");
  CHECK(r.code == 0);

  r = twc("w apply --gen Aminus --pfrak 3,1 --cutoff 8 --json");
  CHECK(r.code == 0);
  CHECK(json_of(r)["[3,1,1]"] == "2");

  r = twc("export --kind plancherel -n 3");
  CHECK(r.code == 0);
  CHECK(json_of(r)["[3]"] == "2/3");

  r = twc("partitions --kind odd -n 5 --json");
  CHECK(r.code == 0);
  CHECK(json_of(r).size() == 3);
}

TEST_CASE("verify exit status") {
  auto r = twc("verify --suite coherence,petrov --json");
  CHECK(r.code == 0);
  CHECK(json_of(r)["ok"] == true);
  CHECK(json_of(r)["reports"].size() == 2);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(twc("").code == 2);
  CHECK(twc("bogus").code == 2);
  CHECK(twc("verify --suite bogus").code == 2);
  CHECK(twc("graph").code == 2);
  CHECK(twc("graph --lambda 2,2").code == 2);
  CHECK(twc("sergeev character --lambda 3,1 --mu 3,3").code == 2);
  CHECK(twc("sergeev class-sum --mu 2 -n 3").code == 2);
  CHECK(twc("center phi --alpha 3 --d 2").code == 2);
  CHECK(twc("center phi --d 3").code == 2);
  CHECK(twc("center phi --d 2,x").code == 2);
  CHECK(twc("w apply --gen Bogus --pfrak 1").code == 2);
  CHECK(twc("export --kind nothing -n 2").code == 2);
  CHECK(twc("partitions -n 99").code == 2);
}

TEST_CASE("runtime failures exit with 1") {
  CHECK(twc("w apply --gen Aminus --pfrak 5,3,1 --cutoff 8").code == 1);
  CHECK(twc("export --kind plancherel -n 2 --out /nonexistent/dir/x.json").code == 1);
}
