#include "qframes/serialization.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qframes/errors.hpp"

namespace qframes {

namespace {

using nlohmann::json;

Quaternion parse_quaternion(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 4) {
    throw ParseError(where + ": expected a 4-array [a0, a1, a2, a3]");
  }
  for (const auto& c : j) {
    if (!c.is_number()) throw ParseError(where + ": non-numeric component");
  }
  return Quaternion(j[0].get<double>(), j[1].get<double>(),
                    j[2].get<double>(), j[3].get<double>());
}

QVector parse_qvector(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  QVector v(static_cast<int>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v[static_cast<int>(i)] =
        parse_quaternion(j[i], where + "[" + std::to_string(i) + "]");
  }
  return v;
}

QMatrix parse_qmatrix(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) {
    throw ParseError(where + ": expected a non-empty array of rows");
  }
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j[0].size());
  QMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols) {
      throw ParseError(where + ": ragged rows");
    }
    for (int c = 0; c < cols; ++c) {
      m(i, c) = parse_quaternion(row[static_cast<std::size_t>(c)],
                                 where + "[" + std::to_string(i) + "][" +
                                     std::to_string(c) + "]");
    }
  }
  return m;
}

std::vector<QVector> parse_family_vectors(const json& j,
                                          const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  std::vector<QVector> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(parse_qvector(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

json quaternion_to_json(const Quaternion& q) {
  return json::array({q.a0, q.a1, q.a2, q.a3});
}

json qvector_to_json(const QVector& v) {
  json out = json::array();
  for (int i = 0; i < v.dim(); ++i) out.push_back(quaternion_to_json(v[i]));
  return out;
}

json qmatrix_to_json(const QMatrix& m) {
  json out = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(quaternion_to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

Instance parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("top level must be an object");

  Instance inst;
  if (doc.contains("dim")) {
    if (!doc["dim"].is_number_integer() || doc["dim"].get<int>() < 1) {
      throw ParseError("dim: expected a positive integer");
    }
    inst.dim = doc["dim"].get<int>();
  }
  if (doc.contains("dims")) {
    const json& d = doc["dims"];
    if (!d.is_array() || d.size() != 2 || !d[0].is_number_integer() ||
        !d[1].is_number_integer() || d[0].get<int>() < 1 ||
        d[1].get<int>() < 1) {
      throw ParseError("dims: expected [n1, n2] with positive integers");
    }
    inst.dims = {d[0].get<int>(), d[1].get<int>()};
  }
  if (doc.contains("weights")) {
    const json& w = doc["weights"];
    if (!w.is_array()) throw ParseError("weights: expected an array");
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!w[i].is_number() || !(w[i].get<double>() > 0.0)) {
        throw ParseError("weights[" + std::to_string(i) +
                         "]: expected a positive number");
      }
      inst.weights.push_back(w[i].get<double>());
    }
  }
  if (doc.contains("vectors")) {
    inst.vectors = parse_family_vectors(doc["vectors"], "vectors");
  }
  if (doc.contains("vectors1")) {
    inst.vectors1 = parse_family_vectors(doc["vectors1"], "vectors1");
  }
  if (doc.contains("vectors2")) {
    inst.vectors2 = parse_family_vectors(doc["vectors2"], "vectors2");
  }
  struct Field {
    const char* name;
    std::optional<QMatrix>* slot;
  };
  Field fields[] = {{"K", &inst.k},   {"K1", &inst.k1}, {"K2", &inst.k2},
                    {"L", &inst.l},   {"M", &inst.m},   {"G", &inst.g},
                    {"G1", &inst.g1}, {"G2", &inst.g2}};
  for (const Field& f : fields) {
    if (doc.contains(f.name)) {
      *f.slot = parse_qmatrix(doc[f.name], f.name);
    }
  }
  return inst;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Instance load_instance(const std::string& path) {
  try {
    return parse_instance(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string instance_to_json(const Instance& inst) {
  json doc = json::object();
  if (inst.dim) doc["dim"] = *inst.dim;
  if (inst.dims) doc["dims"] = json::array({(*inst.dims)[0], (*inst.dims)[1]});
  if (!inst.weights.empty()) doc["weights"] = inst.weights;
  auto put_vectors = [&doc](const char* name,
                            const std::vector<QVector>& vs) {
    if (vs.empty()) return;
    json arr = json::array();
    for (const QVector& v : vs) arr.push_back(qvector_to_json(v));
    doc[name] = std::move(arr);
  };
  put_vectors("vectors", inst.vectors);
  put_vectors("vectors1", inst.vectors1);
  put_vectors("vectors2", inst.vectors2);
  auto put_matrix = [&doc](const char* name,
                           const std::optional<QMatrix>& m) {
    if (m) doc[name] = qmatrix_to_json(*m);
  };
  put_matrix("K", inst.k);
  put_matrix("K1", inst.k1);
  put_matrix("K2", inst.k2);
  put_matrix("L", inst.l);
  put_matrix("M", inst.m);
  put_matrix("G", inst.g);
  put_matrix("G1", inst.g1);
  put_matrix("G2", inst.g2);
  return doc.dump(2) + "\n";
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << instance_to_json(inst);
}

FrameFamily to_family(const Instance& inst) {
  if (!inst.dim) throw ParseError("missing field: dim");
  if (inst.weights.empty()) throw ParseError("missing field: weights");
  if (inst.vectors.empty()) throw ParseError("missing field: vectors");
  if (inst.weights.size() != inst.vectors.size()) {
    throw ParseError("weights and vectors disagree on the atom count");
  }
  for (const QVector& v : inst.vectors) {
    if (v.dim() != *inst.dim) {
      throw ParseError("vectors: entry has wrong dimension");
    }
  }
  return FrameFamily(DiscreteMeasureSpace(inst.weights), inst.vectors,
                     *inst.dim);
}

SuperFrame to_super(const Instance& inst) {
  if (!inst.dims) throw ParseError("missing field: dims");
  if (inst.weights.empty()) throw ParseError("missing field: weights");
  if (inst.vectors1.empty() || inst.vectors2.empty()) {
    throw ParseError("missing field: vectors1/vectors2");
  }
  if (inst.vectors1.size() != inst.weights.size() ||
      inst.vectors2.size() != inst.weights.size()) {
    throw ParseError("vectors1/vectors2 must match the atom count");
  }
  const int n1 = (*inst.dims)[0];
  const int n2 = (*inst.dims)[1];
  for (const QVector& v : inst.vectors1) {
    if (v.dim() != n1) throw ParseError("vectors1: entry has wrong dimension");
  }
  for (const QVector& v : inst.vectors2) {
    if (v.dim() != n2) throw ParseError("vectors2: entry has wrong dimension");
  }
  return SuperFrame(
      FrameFamily(DiscreteMeasureSpace(inst.weights), inst.vectors1, n1),
      FrameFamily(DiscreteMeasureSpace(inst.weights), inst.vectors2, n2));
}

}  // namespace qframes
