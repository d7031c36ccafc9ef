#include "ultrawave/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace ultrawave {

Rat rat_from_string(const std::string& s) {
  std::string t;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t.empty()) throw DomainError("rat_from_string: empty");
  auto slash = t.find('/');
  if (slash != std::string::npos) {
    Rat r(t);
    r.canonicalize();
    return r;
  }
  auto dot = t.find('.');
  if (dot == std::string::npos) {
    Rat r(t);
    r.canonicalize();
    return r;
  }
  // finite decimal
  std::string digits = t.substr(0, dot) + t.substr(dot + 1);
  size_t frac_len = t.size() - dot - 1;
  mpz_class num(digits);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Json field_params_to_json(const FieldParams& fp) {
  Json j;
  j["p"] = fp.p;
  j["c"] = fp.c;
  if (fp.c > 1) j["modulus"] = std::vector<int>{fp.modulus[0], fp.modulus[1], fp.modulus[2]};
  return j;
}

FieldParams field_params_from_json(const Json& j) {
  int p = j.at("p").get<int>();
  int c = j.at("c").get<int>();
  if (c > 1 && j.contains("modulus"))
    return FieldParams::make_with_modulus(p, c, j.at("modulus").get<std::vector<int>>());
  return FieldParams::make(p, c);
}

Json cyclo_to_json(const Cyclo& c) {
  Json j;
  std::vector<std::string> coords;
  for (const auto& r : c.coords()) coords.push_back(rat_to_string(r));
  j["cyclotomic"] = coords;
  return j;
}

Cyclo cyclo_from_json(int p, const Json& j) {
  if (j.contains("cyclotomic")) {
    auto coords = j.at("cyclotomic").get<std::vector<std::string>>();
    if (coords.size() != static_cast<size_t>(p - 1))
      throw DomainError("cyclo_from_json: expected " + std::to_string(p - 1) + " coordinates");
    Cyclo c(p);
    Cyclo acc(p);
    for (size_t i = 0; i < coords.size(); ++i)
      acc += Cyclo::zeta_pow(p, static_cast<long>(i)).scaled(rat_from_string(coords[i]));
    return acc;
  }
  if (j.contains("re")) {
    double im = j.value("im", 0.0);
    if (im != 0.0)
      throw DomainError("cyclo_from_json: nonzero 'im' is not exactly representable; "
                        "use the cyclotomic form");
    Rat re(j.at("re").get<double>());
    re.canonicalize();
    return Cyclo::from_rat(p, re);
  }
  throw DomainError("cyclo_from_json: expected 'cyclotomic' or 're'/'im'");
}

Json realv_to_json(const RealV& v) {
  Json j;
  if (v.exact())
    j["rational"] = rat_to_string(v.rat());
  else
    j["float"] = v.to_double();
  return j;
}

RealV realv_from_json(const Json& j) {
  if (j.contains("rational")) return RealV(rat_from_string(j.at("rational").get<std::string>()));
  if (j.contains("float")) return RealV::flt(j.at("float").get<double>());
  if (j.is_number()) return RealV::flt(j.get<double>());
  throw DomainError("realv_from_json: expected 'rational' or 'float'");
}

Json step_to_json(const StepFunction& f) {
  Json j;
  j["field"] = field_params_to_json(f.params());
  Json pieces = Json::array();
  for (const auto& p : f.pieces()) {
    Json jp;
    jp["center"] = p.ball.center.str();
    jp["level"] = p.ball.level;
    jp["coeff"] = cyclo_to_json(p.coeff);
    pieces.push_back(jp);
  }
  j["pieces"] = pieces;
  return j;
}

StepFunction step_from_json(const Json& j) {
  FieldParams fp = field_params_from_json(j.at("field"));
  std::vector<StepFunction::Piece> raw;
  for (const auto& jp : j.at("pieces")) {
    FieldElement c = FieldElement::parse(fp, jp.at("center").get<std::string>());
    int level = jp.at("level").get<int>();
    Cyclo coeff = cyclo_from_json(fp.p, jp.at("coeff"));
    raw.push_back({Ball(c, level), coeff});
  }
  return StepFunction::from_pieces(fp, std::move(raw));
}

namespace {

Json tail_to_json(const Tail& t) {
  Json j;
  switch (t.kind) {
    case Tail::Kind::Zero:
      j["kind"] = "zero";
      break;
    case Tail::Kind::Power:
      j["kind"] = "power";
      j["A"] = realv_to_json(t.A);
      j["gamma"] = rat_to_string(t.gamma);
      break;
    case Tail::Kind::LogLinear:
      j["kind"] = "loglinear";
      j["a"] = realv_to_json(t.a);
      j["b"] = realv_to_json(t.b);
      j["gamma"] = rat_to_string(t.gamma);
      break;
    case Tail::Kind::BesselPow:
      j["kind"] = "bessel";
      j["sigma"] = rat_to_string(t.sigma);
      break;
  }
  return j;
}

Tail tail_from_json(const Json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "zero") return Tail::zero();
  if (kind == "power")
    return Tail::power(realv_from_json(j.at("A")),
                       rat_from_string(j.at("gamma").get<std::string>()));
  if (kind == "loglinear")
    return Tail::log_linear(realv_from_json(j.at("a")), realv_from_json(j.at("b")),
                            rat_from_string(j.at("gamma").get<std::string>()));
  if (kind == "bessel")
    return Tail::bessel_pow(rat_from_string(j.at("sigma").get<std::string>()));
  throw DomainError("tail_from_json: unknown kind " + kind);
}

}  // namespace

Json profile_to_json(const RadialProfile& f) {
  Json j;
  j["field"] = field_params_to_json(f.params());
  Json w = Json::object();
  for (const auto& [m, v] : f.window()) w[std::to_string(m)] = realv_to_json(v);
  j["window"] = w;
  j["inner_tail"] = tail_to_json(f.inner_tail());
  j["outer_tail"] = tail_to_json(f.outer_tail());
  return j;
}

RadialProfile profile_from_json(const Json& j) {
  FieldParams fp = field_params_from_json(j.at("field"));
  std::map<int, RealV> window;
  for (auto it = j.at("window").begin(); it != j.at("window").end(); ++it)
    window.emplace(std::stoi(it.key()), realv_from_json(it.value()));
  return RadialProfile(fp, std::move(window), tail_from_json(j.at("inner_tail")),
                       tail_from_json(j.at("outer_tail")));
}

Json packet_to_json(const WaveletPacket& w) {
  Json j;
  j["field"] = field_params_to_json(w.freq.params());
  j["n"] = w.n;
  j["j"] = w.j;
  j["k"] = w.k;
  j["digits"] = w.digits;
  j["freq"] = step_to_json(w.freq.step);
  Json wt = Json::array();
  for (const auto& f : w.freq.weight.factors()) {
    Json jf;
    jf["sigma"] = rat_to_string(f.sigma);
    jf["level"] = f.level;
    wt.push_back(jf);
  }
  j["weight"] = wt;
  j["half_scale"] = w.freq.half_scale;
  return j;
}

std::string gram_to_csv(const GramResult& g, unsigned long N, unsigned long K) {
  if (g.entries.empty()) throw DomainError("gram_to_csv: entries not stored");
  std::ostringstream os;
  os << "n,k,m,l,re,im\n";
  for (unsigned long n = 0; n < N; ++n)
    for (unsigned long k = 0; k < K; ++k)
      for (unsigned long m = 0; m < N; ++m)
        for (unsigned long l = 0; l < K; ++l) {
          auto z = g.entries[n * K + k][m * K + l].to_complex();
          os << n << "," << k << "," << m << "," << l << "," << z.real() << "," << z.imag()
             << "\n";
        }
  return os.str();
}

std::string fractal_ft_to_csv(const FractalFTReport& rep) {
  std::ostringstream os;
  os << "m,center,re,im\n";
  for (const auto& p : rep.ft.pieces()) {
    int m = p.ball.center.is_zero() ? -p.ball.level : p.ball.center.norm_exponent();
    auto z = p.coeff.to_complex();
    os << m << ",\"" << p.ball.center.str() << "\"," << z.real() << "," << z.imag() << "\n";
  }
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write file: " + path);
  out << content;
}

}  // namespace ultrawave
