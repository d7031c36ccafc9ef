#include <random>

#include "doctest.h"
#include "ultrawave/io.hpp"

using namespace ultrawave;

TEST_CASE("rational parsing") {
  CHECK(rat_from_string("3/4") == Rat(3, 4));
  CHECK(rat_from_string("-1.25") == Rat(-5, 4));
  CHECK(rat_from_string("7") == Rat(7));
  CHECK(rat_from_string(" 1/2 ") == Rat(1, 2));
  CHECK_THROWS_AS(rat_from_string(""), DomainError);
}

TEST_CASE("cyclotomic serialization") {
  Cyclo z = Cyclo::zeta_pow(3, 1).scaled(Rat(2, 3)) + Cyclo::from_rat(3, Rat(1, 7));
  Json j = cyclo_to_json(z);
  CHECK(cyclo_from_json(3, j) == z);

  Json re;
  re["re"] = 0.5;
  re["im"] = 0.0;
  CHECK(cyclo_from_json(2, re) == Cyclo::from_rat(2, Rat(1, 2)));
  re["im"] = 0.25;
  CHECK_THROWS_AS(cyclo_from_json(2, re), DomainError);
}

TEST_CASE("step function round-trip is canonical") {
  for (auto [p, c] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
    FieldParams fp = FieldParams::make(p, c);
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> lvl(-3, 3);
    std::uniform_int_distribution<long> coord(0, fp.q - 1);
    std::uniform_int_distribution<int> num(-3, 3);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<StepFunction::Piece> raw;
      for (int i = 0; i < 4; ++i) {
        int level = lvl(rng);
        FieldElement ce(fp);
        for (int e = level - 2; e < level; ++e) {
          long v = coord(rng);
          if (v != 0) ce.set_coeff(e, gf_from_index(fp, v));
        }
        raw.push_back({Ball(ce, level),
                       Cyclo::zeta_pow(fp.p, i % fp.p).scaled(Rat(num(rng)))});
      }
      StepFunction f = StepFunction::from_pieces(fp, std::move(raw));
      Json j = step_to_json(f);
      CHECK(step_from_json(j) == f);
      // deterministic output
      CHECK(j.dump() == step_to_json(f).dump());
    }
  }
}

TEST_CASE("radial profile round-trip") {
  FieldParams fp = FieldParams::make(2, 1);
  RadialProfile f = make_example_profile(fp, 1, Rat(1));
  Json j = profile_to_json(f);
  RadialProfile g = profile_from_json(j);
  CHECK(g.window().size() == f.window().size());
  for (int m = -5; m <= 5; ++m) {
    RealV a = f.value_at_shell(m), b = g.value_at_shell(m);
    CHECK(a.exact() == b.exact());
    if (a.exact()) CHECK(a.rat() == b.rat());
  }
  CHECK(profile_to_json(g).dump() == j.dump());

  RadialProfile k = kappa_profile(fp, Rat(3, 2));
  RadialProfile k2 = profile_from_json(profile_to_json(k));
  CHECK(k2.inner_tail().kind == Tail::Kind::BesselPow);
  CHECK(k2.inner_tail().sigma == Rat(-3, 4));
}

TEST_CASE("packet serialization carries the construction data") {
  FieldParams fp = FieldParams::make(2, 1);
  FilterBank bank = make_haar_bank(fp);
  ScalingFamily fam(fp, Rat(1));
  WaveletPacket w = wavelet_packet(bank, fam, 5, 1, 2);
  Json j = packet_to_json(w);
  CHECK(j["n"] == 5);
  CHECK(j["j"] == 1);
  CHECK(j["k"] == 2);
  CHECK(j["digits"].size() == 3);
  CHECK(j["half_scale"] == -1);
  StepFunction back = step_from_json(j["freq"]);
  CHECK(back == w.freq.step);
}

TEST_CASE("gram and fractal csv emitters") {
  FieldParams fp = FieldParams::make(2, 1);
  FilterBank bank = make_haar_bank(fp);
  GramResult g = packet_gram(bank, ScalingFamily(fp, Rat(0)), 0, 2, 2,
                             SobolevParams::exact(Rat(0)), true);
  std::string csv = gram_to_csv(g, 2, 2);
  CHECK(csv.find("n,k,m,l,re,im") == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 17);

  FractalFTReport rep = fractal_ft_profile(weierstrass_truncate(3));
  std::string fcsv = fractal_ft_to_csv(rep);
  CHECK(fcsv.find("m,center,re,im") == 0);
}

TEST_CASE("field params round-trip with modulus") {
  FieldParams f4 = FieldParams::make(2, 2);
  Json j = field_params_to_json(f4);
  CHECK(field_params_from_json(j) == f4);
  FieldParams f3 = FieldParams::make(3, 1);
  CHECK(field_params_from_json(field_params_to_json(f3)) == f3);
}
