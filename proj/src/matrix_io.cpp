#include "sectorlab/matrix_io.hpp"

#include <fstream>

namespace sectorlab {

using nlohmann::json;

json matrix_to_json(const Matrix& m) {
  json re = json::array(), im = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json rr = json::array(), ri = json::array();
    for (Index j = 0; j < m.cols(); ++j) {
      rr.push_back(m(i, j).real());
      ri.push_back(m(i, j).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  json out;
  if (m.rows() == m.cols()) {
    out["dim"] = m.rows();
  } else {
    out["rows"] = m.rows();
    out["cols"] = m.cols();
  }
  out["re"] = std::move(re);
  out["im"] = std::move(im);
  return out;
}

Matrix matrix_from_json(const json& j) {
  try {
    if (!j.is_object() || !j.contains("re")) {
      throw Error(ErrorKind::Parse, "matrix JSON must be an object with \"re\"");
    }
    const json& re = j.at("re");
    if (!re.is_array() || re.empty() || !re.at(0).is_array()) {
      throw Error(ErrorKind::Parse, "\"re\" must be a non-empty array of rows");
    }
    const auto rows = static_cast<Index>(re.size());
    const auto cols = static_cast<Index>(re.at(0).size());
    Index want_rows = rows, want_cols = cols;
    if (j.contains("dim")) {
      want_rows = want_cols = j.at("dim").get<Index>();
    } else if (j.contains("rows") || j.contains("cols")) {
      want_rows = j.at("rows").get<Index>();
      want_cols = j.at("cols").get<Index>();
    }
    if (want_rows != rows || want_cols != cols || cols < 1) {
      throw Error(ErrorKind::Parse, "matrix JSON: declared shape does not match entries");
    }
    const bool has_im = j.contains("im");
    const json im = has_im ? j.at("im") : json();
    if (has_im && (!im.is_array() || static_cast<Index>(im.size()) != rows)) {
      throw Error(ErrorKind::Parse, "matrix JSON: \"im\" shape does not match \"re\"");
    }
    Matrix m(rows, cols);
    for (Index r = 0; r < rows; ++r) {
      const json& rr = re.at(r);
      if (static_cast<Index>(rr.size()) != cols) {
        throw Error(ErrorKind::Parse, "matrix JSON: ragged \"re\" rows");
      }
      if (has_im && static_cast<Index>(im.at(r).size()) != cols) {
        throw Error(ErrorKind::Parse, "matrix JSON: ragged \"im\" rows");
      }
      for (Index c = 0; c < cols; ++c) {
        const double x = rr.at(c).get<double>();
        const double y = has_im ? im.at(r).at(c).get<double>() : 0.0;
        m(r, c) = cdouble(x, y);
      }
    }
    require_finite(m, "matrix JSON");
    return m;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("matrix JSON: ") + e.what());
  }
}

Matrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
  }
  return matrix_from_json(j);
}

void write_matrix_file(const std::filesystem::path& path, const Matrix& m) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
  out << matrix_to_json(m).dump(2) << '\n';
}

}  // namespace sectorlab
