#include "sigmalab/serialize.hpp"

#include <fstream>
#include <random>

namespace sigmalab {

using nlohmann::json;

json to_json(const BoundedReal& x) { return json{{"lo", x.lo_string()}, {"hi", x.hi_string()}}; }

json to_json(const SigmaCertificate& c) {
  return json{{"n", c.n}, {"sigma", c.sigma}, {"bits_used", c.bits_used}, {"method", to_string(c.method)}};
}

json to_json(const CandidateBracket& b) {
  return json{{"n", b.n}, {"lower", to_json(b.lower)}, {"upper", to_json(b.upper)}, {"candidates", b.candidates}};
}

json to_json(const ChangePointRecord& r) {
  json j{{"index", r.index}, {"n_i", r.n_i}, {"sigma_at", r.sigma_at}, {"bits_used", r.bits_used}};
  j["gap"] = r.gap ? json(*r.gap) : json(nullptr);
  j["quotient"] = r.quotient ? to_json(*r.quotient) : json(nullptr);
  return j;
}

json to_json(const QuotientRow& q) {
  return json{{"index", q.index}, {"quotient", to_json(q.quotient)}, {"minus_e2", to_json(q.minus_e2)}};
}

json to_json(const NaResult& r, const std::string& a_text) {
  return json{{"a", a_text}, {"n_a", r.n_a}, {"n_env", r.n_env}, {"r", r.r}};
}

json to_json(const verify::CheckReport& r) {
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  json witnesses = json::array();
  for (const auto& w : r.witnesses) {
    json item{{"label", w.label}};
    if (w.value) {
      item["lo"] = w.value->lo_string();
      item["hi"] = w.value->hi_string();
    } else {
      item["value"] = w.text;
    }
    witnesses.push_back(std::move(item));
  }
  return json{{"check_id", r.check_id},
              {"params", std::move(params)},
              {"verdict", verify::to_string(r.verdict)},
              {"witnesses", std::move(witnesses)}};
}

std::string cache_line(const ChangePointRecord& r) {
  return json{{"index", r.index}, {"n_i", r.n_i}, {"sigma_at", r.sigma_at}, {"bits_used", r.bits_used}}.dump();
}

ChangePointRecord parse_cache_line(const std::string& line) {
  ChangePointRecord r;
  try {
    const json j = json::parse(line);
    r.index = j.at("index").get<std::int64_t>();
    r.n_i = j.at("n_i").get<std::uint64_t>();
    r.sigma_at = j.at("sigma_at").get<std::int64_t>();
    r.bits_used = j.at("bits_used").get<unsigned>();
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed cache line: ") + e.what());
  }
  if (r.index < 1 || r.sigma_at != r.index + 1) throw std::runtime_error("cache record violates sigma_at = index + 1");
  return r;
}

void write_cache(const std::filesystem::path& path, const std::vector<ChangePointRecord>& records) {
  std::random_device rd;
  std::filesystem::path tmp = path;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    for (const auto& r : records) out << cache_line(r) << '\n';
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::vector<ChangePointRecord> read_cache(const std::filesystem::path& path) {
  std::vector<ChangePointRecord> out;
  std::ifstream in(path);
  if (!in) return out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(parse_cache_line(line));
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].index != static_cast<std::int64_t>(i) + 1) throw std::runtime_error("cache records are not consecutive");
  }
  return out;
}

}  // namespace sigmalab
