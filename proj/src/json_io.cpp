#include "bt1/json_io.hpp"

#include <string>
#include <vector>

namespace bt1 {

static long long get_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    fail(Errc::ParseError, std::string("expected integer field \"") + key + '"');
  return j[key].get<long long>();
}

static std::vector<long long> get_int_array(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    fail(Errc::ParseError, std::string("expected array field \"") + key + '"');
  std::vector<long long> out;
  for (const auto& v : j[key]) {
    if (!v.is_number_integer())
      fail(Errc::ParseError,
           std::string("non-integer entry in \"") + key + '"');
    out.push_back(v.get<long long>());
  }
  return out;
}

Json to_json(const PartitionedPermutation& pp) {
  Json j;
  j["elements"] = pp.labels();
  std::vector<long long> fs, vs;
  for (std::size_t i = 0; i < pp.size(); ++i)
    (pp.tag_at(i) == Letter::F ? fs : vs).push_back(pp.labels()[i]);
  j["f"] = fs;
  j["v"] = vs;
  Json perm = Json::object();
  for (std::size_t i = 0; i < pp.size(); ++i)
    perm[std::to_string(pp.labels()[i])] = pp.labels()[pp.image_at(i)];
  j["perm"] = perm;
  return j;
}

PartitionedPermutation perm_from_json(const Json& j) {
  const auto elements = get_int_array(j, "elements");
  const auto fs = get_int_array(j, "f");
  const auto vs = get_int_array(j, "v");
  if (!j.contains("perm") || !j["perm"].is_object())
    fail(Errc::ParseError, "expected object field \"perm\"");

  std::map<long long, std::uint32_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (!index.emplace(elements[i], static_cast<std::uint32_t>(i)).second)
      fail(Errc::ParseError,
           "duplicate element " + std::to_string(elements[i]));

  std::vector<Letter> tags(elements.size(), Letter::F);
  std::vector<bool> tagged(elements.size(), false);
  auto apply = [&](const std::vector<long long>& side, Letter tag) {
    for (long long x : side) {
      auto it = index.find(x);
      if (it == index.end())
        fail(Errc::UnknownElement,
             std::to_string(x) + " is tagged but not listed");
      if (tagged[it->second])
        fail(Errc::ParseError, std::to_string(x) + " is tagged twice");
      tagged[it->second] = true;
      tags[it->second] = tag;
    }
  };
  apply(fs, Letter::F);
  apply(vs, Letter::V);
  if (fs.size() + vs.size() != elements.size())
    fail(Errc::ParseError, "the f and v parts must partition the elements");

  std::vector<std::uint32_t> perm(elements.size());
  std::vector<bool> mapped(elements.size(), false);
  for (const auto& [key, value] : j["perm"].items()) {
    long long src;
    try {
      src = std::stoll(key);
    } catch (const std::exception&) {
      fail(Errc::ParseError, "non-integer key \"" + key + "\" in perm");
    }
    auto it = index.find(src);
    if (it == index.end())
      fail(Errc::UnknownElement, key + " is mapped but not listed");
    if (!value.is_number_integer())
      fail(Errc::ParseError, "non-integer image for " + key);
    auto target = index.find(value.get<long long>());
    if (target == index.end())
      fail(Errc::UnknownElement,
           "image of " + key + " is not a listed element");
    if (mapped[it->second])
      fail(Errc::ParseError, key + " is mapped twice");
    mapped[it->second] = true;
    perm[it->second] = target->second;
  }
  if (j["perm"].size() != elements.size())
    fail(Errc::ParseError, "perm must map every element");
  return PartitionedPermutation::make(elements, std::move(tags),
                                      std::move(perm));
}

Json to_json(const CanonicalType& ct) {
  Json j;
  j["s"] = ct.s;
  j["r"] = ct.r;
  j["phi"] = ct.phi;
  j["nu"] = ct.nu;
  j["rho"] = ct.rho;
  return j;
}

CanonicalType canonical_from_json(const Json& j) {
  CanonicalType ct;
  ct.s = get_int(j, "s");
  ct.r = get_int(j, "r");
  ct.phi = get_int_array(j, "phi");
  ct.nu = get_int_array(j, "nu");
  ct.rho = get_int_array(j, "rho");
  ct.validate();
  return ct;
}

Json to_json(const ElementarySequence& es) {
  Json j;
  j["g"] = es.g();
  j["psi"] = es.psi;
  j["rle"] = RunLengthEO::from_psi(es).str();
  return j;
}

ElementarySequence es_from_json(const Json& j) {
  ElementarySequence es;
  es.psi = get_int_array(j, "psi");
  es.validate();
  if (get_int(j, "g") != es.g())
    fail(Errc::ParseError, "the g field disagrees with the psi length");
  if (j.contains("rle")) {
    if (!j["rle"].is_string())
      fail(Errc::ParseError, "expected string field \"rle\"");
    if (RunLengthEO::parse(j["rle"].get<std::string>()).expand() != es)
      fail(Errc::ParseError, "the rle field disagrees with psi");
  }
  return es;
}

Json to_json(const InvariantBundle& b) {
  Json j;
  j["g"] = b.g;
  j["p_rank"] = b.p_rank;
  j["a"] = b.a;
  j["s11"] = b.s11;
  j["u11"] = b.u11;
  j["sel_dim"] = b.sel_dim();
  return j;
}

InvariantBundle bundle_from_json(const Json& j) {
  InvariantBundle b;
  b.g = get_int(j, "g");
  b.p_rank = get_int(j, "p_rank");
  b.a = get_int(j, "a");
  b.s11 = get_int(j, "s11");
  b.u11 = get_int(j, "u11");
  if (get_int(j, "sel_dim") != b.sel_dim())
    fail(Errc::ParseError, "sel_dim must equal a + u11 - s11");
  return b;
}

}  // namespace bt1
