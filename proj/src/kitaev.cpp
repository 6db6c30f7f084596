#include "cic/kitaev.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <vector>

#include "cic/quadrature.hpp"

namespace cic::kitaev {

namespace {

constexpr double kPi = std::numbers::pi;

Couplings permute_for_link(const Couplings& j, Link link) {
  switch (link) {
    case Link::Z:
      return j;
    case Link::X:
      return Couplings{j.jz, j.jy, j.jx};
    case Link::Y:
      return Couplings{j.jx, j.jz, j.jy};
  }
  throw validation_error("unknown link type");
}

void check_tolerance(double tol) {
  if (!(tol >= 1e-10 && tol <= 1e-3)) {
    throw validation_error("link correlator tolerance must lie in [1e-10, 1e-3]");
  }
}

}  // namespace

std::string to_string(Link link) {
  switch (link) {
    case Link::X: return "x";
    case Link::Y: return "y";
    case Link::Z: return "z";
  }
  return "?";
}

std::string to_string(Phase phase) {
  switch (phase) {
    case Phase::GaplessB: return "GaplessB";
    case Phase::GappedAx: return "GappedAx";
    case Phase::GappedAy: return "GappedAy";
    case Phase::GappedAz: return "GappedAz";
  }
  return "?";
}

double link_correlator_quadrature(const Couplings& j, Link link, double tol, long max_panels) {
  check_tolerance(tol);
  const Couplings p = permute_for_link(j, link);
  auto integrand = [&](double wx, double wy) {
    const double eps = p.jz + p.jx * std::cos(wx) + p.jy * std::cos(wy);
    const double del = p.jx * std::sin(wx) + p.jy * std::sin(wy);
    const double s = eps * eps + del * del;
    return s == 0.0 ? 0.0 : eps / std::sqrt(s);
  };
  const double scale = 4.0 * kPi * kPi;
  const Adaptive2dResult result =
      integrate_adaptive_2d(integrand, -kPi, kPi, -kPi, kPi, tol * scale, max_panels);
  if (!result.converged) {
    throw integration_error("link correlator quadrature did not reach the requested tolerance",
                            result.error_estimate / scale);
  }
  return result.value / scale;
}

double link_correlator(const Couplings& j, Link link, double tol) {
  check_tolerance(tol);
  const Couplings p = permute_for_link(j, link);
  if (p.jz == 0.0) return 0.0;  // odd under the (pi, pi) shift of the torus
  return link_correlator_quadrature(j, link, tol);
}

double cic_link(const Couplings& j, Link link, double tol) {
  return std::abs(link_correlator(j, link, tol));
}

BlochRepresentation link_bloch_state(const Couplings& j, Link link, double tol) {
  const double w = link_correlator(j, link, tol);
  BlochRepresentation bloch;
  bloch.d = 2;
  bloch.a = RealVector::Zero(3);
  bloch.b = RealVector::Zero(3);
  bloch.T = RealMatrix::Zero(3, 3);
  const Index axis = link == Link::X ? 0 : (link == Link::Y ? 1 : 2);
  bloch.T(axis, axis) = w;
  return bloch;
}

Phase phase_region(const Couplings& j) {
  const double ax = std::abs(j.jx);
  const double ay = std::abs(j.jy);
  const double az = std::abs(j.jz);
  if (ax <= ay + az && ay <= ax + az && az <= ax + ay) return Phase::GaplessB;
  if (ax > ay && ax > az) return Phase::GappedAx;
  if (ay > ax && ay > az) return Phase::GappedAy;
  return Phase::GappedAz;
}

namespace {

// Minimal recursive-descent parser for affine expressions c0 + c1 * jz.
struct Affine {
  double c0 = 0.0;
  double c1 = 0.0;
};

class LineParser {
 public:
  explicit LineParser(const std::string& text) : text_(text) {}

  Affine parse_expression() {
    Affine value = parse_term();
    for (;;) {
      skip_spaces();
      if (consume('+')) {
        const Affine rhs = parse_term();
        value.c0 += rhs.c0;
        value.c1 += rhs.c1;
      } else if (consume('-')) {
        const Affine rhs = parse_term();
        value.c0 -= rhs.c0;
        value.c1 -= rhs.c1;
      } else {
        return value;
      }
    }
  }

  void expect_end() {
    skip_spaces();
    if (pos_ != text_.size()) {
      throw validation_error("line expression: unexpected trailing input '" +
                             text_.substr(pos_) + "'");
    }
  }

 private:
  Affine parse_term() {
    Affine value = parse_unary();
    for (;;) {
      skip_spaces();
      if (consume('*')) {
        const Affine rhs = parse_unary();
        if (value.c1 != 0.0 && rhs.c1 != 0.0) {
          throw validation_error("line expression must be affine in jz");
        }
        value = Affine{value.c0 * rhs.c0, value.c0 * rhs.c1 + value.c1 * rhs.c0};
      } else if (consume('/')) {
        const Affine rhs = parse_unary();
        if (rhs.c1 != 0.0) throw validation_error("line expression: division by jz");
        if (rhs.c0 == 0.0) throw validation_error("line expression: division by zero");
        value.c0 /= rhs.c0;
        value.c1 /= rhs.c0;
      } else {
        return value;
      }
    }
  }

  Affine parse_unary() {
    skip_spaces();
    if (consume('-')) {
      Affine value = parse_unary();
      value.c0 = -value.c0;
      value.c1 = -value.c1;
      return value;
    }
    if (consume('+')) return parse_unary();
    return parse_primary();
  }

  Affine parse_primary() {
    skip_spaces();
    if (consume('(')) {
      Affine value = parse_expression();
      skip_spaces();
      if (!consume(')')) throw validation_error("line expression: missing ')'");
      return value;
    }
    if (text_.compare(pos_, 2, "jz") == 0) {
      pos_ += 2;
      return Affine{0.0, 1.0};
    }
    std::size_t consumed = 0;
    double number = 0.0;
    try {
      number = std::stod(text_.substr(pos_), &consumed);
    } catch (const std::exception&) {
      throw validation_error("line expression: expected a number near '" + text_.substr(pos_) +
                             "'");
    }
    pos_ += consumed;
    return Affine{number, 0.0};
  }

  void skip_spaces() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(char c) {
    skip_spaces();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

std::string strip(const std::string& s) {
  std::size_t begin = 0, end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return s.substr(begin, end - begin);
}

}  // namespace

LineParameterization parse_line(const std::string& text) {
  bool have_jx = false, have_jy = false;
  LineParameterization line;

  std::vector<std::string> assignments;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if ((c == ',' || c == ';') && depth == 0) {
      assignments.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  assignments.push_back(current);

  for (const std::string& assignment : assignments) {
    if (strip(assignment).empty()) continue;
    // Chained targets: the final '='-separated piece is the expression.
    std::vector<std::string> pieces;
    std::string piece;
    for (char c : assignment) {
      if (c == '=') {
        pieces.push_back(piece);
        piece.clear();
      } else {
        piece.push_back(c);
      }
    }
    pieces.push_back(piece);
    if (pieces.size() < 2) {
      throw validation_error("line parameterization needs assignments like jx=...");
    }
    LineParser parser(pieces.back());
    const Affine value = parser.parse_expression();
    parser.expect_end();
    for (std::size_t t = 0; t + 1 < pieces.size(); ++t) {
      const std::string target = strip(pieces[t]);
      if (target == "jx") {
        line.jx0 = value.c0;
        line.jx_slope = value.c1;
        have_jx = true;
      } else if (target == "jy") {
        line.jy0 = value.c0;
        line.jy_slope = value.c1;
        have_jy = true;
      } else {
        throw validation_error("line parameterization target must be jx or jy, got '" + target +
                               "'");
      }
    }
  }
  if (!have_jx || !have_jy) {
    throw validation_error("line parameterization must assign both jx and jy");
  }
  return line;
}

LineScan line_scan(double jz_min, double jz_max, double step, Link link, double tol,
                   const LineParameterization& line, int threads, double z_threshold) {
  if (!(jz_min >= 0.0 && jz_min < jz_max && jz_max <= 1.0)) {
    throw validation_error("line scan requires 0 <= jz_min < jz_max <= 1");
  }
  LineScan result;
  result.jz = scan::uniform_grid(jz_min, jz_max, step);
  const Index n = result.jz.size();
  result.jx.resize(n);
  result.jy.resize(n);
  result.correlator.resize(n);
  result.value.resize(n);
  result.phase.resize(static_cast<std::size_t>(n));

  for (Index i = 0; i < n; ++i) {
    const Couplings j = line.at(result.jz(i));
    if (std::abs(j.jx + j.jy + j.jz - 1.0) > 1e-12) {
      throw validation_error("plane scan requires jx + jy + jz = 1 along the whole line");
    }
    result.jx(i) = j.jx;
    result.jy(i) = j.jy;
  }
  scan::parallel_for(n, threads, [&](Index i) {
    const Couplings j{result.jx(i), result.jy(i), result.jz(i)};
    result.correlator(i) = link_correlator(j, link, tol);
    result.value(i) = std::abs(result.correlator(i));
    result.phase[static_cast<std::size_t>(i)] = phase_region(j);
  });
  result.susceptibility = scan::susceptibility(result.jz, result.value);
  result.critical_points = scan::detect_kinks(result.jz, result.value, z_threshold);
  return result;
}

}  // namespace cic::kitaev
