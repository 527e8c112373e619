#include "symsq/json_io.hpp"

namespace symsq {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw UnsupportedInput(std::string("json: missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get(const json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const json::exception& e) {
    throw UnsupportedInput(std::string("json: bad field '") + key + "': " + e.what());
  }
}

json roots(const std::vector<cplx>& r) {
  json out = json::array();
  for (const cplx& z : r) out.push_back(to_json(z));
  return out;
}

}  // namespace

json to_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

cplx complex_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_object() && j.contains("rot")) {
    const double mag = j.contains("mag") ? get<double>(j, "mag") : 1.0;
    return mag * Rotation::parse(get<std::string>(j, "rot")).value();
  }
  return {get<double>(j, "re"), get<double>(j, "im")};
}

json to_json(const PadicNumber& a) {
  if (a.is_zero()) return "0";
  return {{"v", a.valuation()}, {"u", a.unit()}};
}

PadicNumber padic_from_json(const Field& f, const json& j) {
  if (j.is_string() && j.get<std::string>() == "0") return PadicNumber::zero(f);
  if (j.is_number_integer()) return PadicNumber::from_integer(f, j.get<std::int64_t>());
  const auto u = get<std::int64_t>(j, "u");
  if (u % f.p == 0) throw UnsupportedInput("json: unit part divisible by p");
  return PadicNumber::make(f, get<int>(j, "v"), u);
}

json to_json(const MultChar& chi) {
  return {{"p", chi.p()}, {"n", chi.conductor()}, {"gen_exp", chi.rotation().to_string()}, {"z", to_json(chi.z())}};
}

MultChar multchar_from_json(const json& j) {
  const auto p = get<std::int64_t>(j, "p");
  const int n = j.contains("n") ? get<int>(j, "n") : 0;
  const Rotation rot = j.contains("gen_exp") ? Rotation::parse(get<std::string>(j, "gen_exp")) : Rotation{};
  const cplx z = j.contains("z") ? complex_from_json(j.at("z")) : cplx(1.0);
  if (p < 3 || !intmod::is_prime(p)) throw UnsupportedInput("json: p must be an odd prime");
  return MultChar::make(p, n, rot, z);
}

json to_json(const LFactor& l) { return {{"inverse_roots", roots(l.inverse_roots())}, {"rendered", l.render()}}; }

json to_json(const LaurentRational& r) {
  json num = json::array(), den = json::array();
  for (const cplx& c : r.num_coeffs()) num.push_back(to_json(c));
  for (const cplx& c : r.den_coeffs()) den.push_back(to_json(c));
  return {{"unit", {{"c", to_json(r.unit_coeff())}, {"k", r.unit_exp()}}}, {"num", num}, {"den", den},
          {"rendered", r.render()}};
}

json to_json(const GL2& g) { return json::array({to_json(g.a), to_json(g.b), to_json(g.c), to_json(g.d)}); }

GL2 gl2_from_json(const Field& f, const json& j) {
  if (!j.is_array() || j.size() != 4) throw UnsupportedInput("json: GL2 element must be a 4-element array");
  return {padic_from_json(f, j[0]), padic_from_json(f, j[1]), padic_from_json(f, j[2]), padic_from_json(f, j[3])};
}

json to_json(const GL2Rep& pi) {
  if (pi.is_ps()) return {{"kind", "ps"}, {"chi1", to_json(pi.chi1)}, {"chi2", to_json(pi.chi2)}};
  return {{"kind", "steinberg"}, {"twist", to_json(pi.chi1)}};
}

GL2Rep gl2rep_from_json(const json& j) {
  const auto kind = get<std::string>(j, "kind");
  if (kind == "ps") {
    const MultChar a = multchar_from_json(field(j, "chi1")), b = multchar_from_json(field(j, "chi2"));
    if (a.p() != b.p()) throw UnsupportedInput("json: characters over different primes");
    return GL2Rep::principal_series(a, b);
  }
  if (kind == "steinberg") return GL2Rep::steinberg(multchar_from_json(field(j, "twist")));
  throw UnsupportedInput("json: unknown representation kind '" + kind + "'");
}

json to_json(const SchwartzFn& phi) {
  json out = json::array();
  for (const auto& t : phi.terms()) out.push_back({{"a", to_json(t.a)}, {"k", t.k}, {"c", to_json(t.c)}});
  return out;
}

SchwartzFn schwartz_from_json(const Field& f, const json& j) {
  if (!j.is_array()) throw UnsupportedInput("json: Schwartz function must be an array of terms");
  std::vector<SchwartzFn::Term> terms;
  for (const auto& t : j)
    terms.push_back({padic_from_json(f, field(t, "a")), get<int>(t, "k"),
                     t.contains("c") ? complex_from_json(t.at("c")) : cplx(1.0)});
  return SchwartzFn(std::move(terms));
}

json to_json(const TateTriple& t) {
  return {{"L", to_json(t.L)}, {"epsilon", to_json(t.epsilon)}, {"gamma", to_json(t.gamma)}};
}

json to_json(const BesselRow& row) { return {{"v", row.v}, {"class", row.cls}, {"j", to_json(row.j)}}; }

}  // namespace symsq
