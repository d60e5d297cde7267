/* Copyright 2026 The puzzlepath Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "puzzle/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace puzzle {

namespace {

char mark(std::optional<Label> l) { return l ? label_char(*l) : '.'; }

struct Point {
  double x;
  double y;
};

constexpr double kSide = 60.0;
constexpr double kMargin = 30.0;

Point vertex(int n, int a, int b) {
  const double h = kSide * std::sqrt(3.0) / 2.0;
  return {kMargin + (b - a / 2.0 + n / 2.0) * kSide, kMargin + a * h};
}

const char* fill_for(std::optional<BranchKind> k) {
  if (!k) return "#f4f1ea";
  switch (*k) {
    case BranchKind::Boring: return "#e8e4da";
    case BranchKind::Equivariant: return "#9ecae1";
    case BranchKind::ShiftZero: return "#c7e9c0";
    case BranchKind::ShiftOne: return "#fdd0a2";
    case BranchKind::TopK: return "#fb6a4a";
  }
  return "#ffffff";
}

const char* stroke_for(std::optional<Label> l) {
  if (!l) return "#bbbbbb";
  switch (*l) {
    case Label::Zero: return "#333333";
    case Label::One: return "#1f4e9c";
    case Label::R: return "#b8860b";
    case Label::K: return "#c0141c";
  }
  return "#000000";
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

void polygon(std::ostringstream& out, std::initializer_list<Point> pts, const char* fill) {
  out << "  <polygon points=\"";
  bool first = true;
  for (const Point& p : pts) {
    out << (first ? "" : " ") << fmt(p.x) << "," << fmt(p.y);
    first = false;
  }
  out << "\" fill=\"" << fill << "\" stroke=\"none\"/>\n";
}

void edge(std::ostringstream& out, Point p, Point q, std::optional<Label> l) {
  out << "  <line x1=\"" << fmt(p.x) << "\" y1=\"" << fmt(p.y) << "\" x2=\"" << fmt(q.x) << "\" y2=\"" << fmt(q.y)
      << "\" stroke=\"" << stroke_for(l) << "\" stroke-width=\"" << (l ? 2 : 1) << "\"/>\n";
  if (!l) return;
  const Point m{(p.x + q.x) / 2.0, (p.y + q.y) / 2.0};
  out << "  <text x=\"" << fmt(m.x) << "\" y=\"" << fmt(m.y + 4.0) << "\" font-family=\"monospace\" font-size=\"13\""
      << " text-anchor=\"middle\" fill=\"" << stroke_for(l) << "\" stroke=\"#ffffff\" stroke-width=\"3\""
      << " paint-order=\"stroke\">" << label_char(*l) << "</text>\n";
}

}  // namespace

std::string render_ascii(const Puzzle& pz) {
  const int n = pz.n();
  std::string out;
  for (int a = 1; a <= n; ++a) {
    std::string row(static_cast<std::size_t>(3 * (n - a)), ' ');
    for (int b = 1; b <= a; ++b) {
      if (b > 1) row += ' ';
      row += '/';
      row += mark(pz.sw(a - 1, b - 1));
      row += '_';
      row += mark(pz.hz(a, b));
      row += '\\';
      row += mark(pz.se(a - 1, b - 1));
    }
    out += row;
    out += '\n';
  }
  return out;
}

std::string render_svg(const Puzzle& pz, const std::string& title) {
  const int n = pz.n();
  const double width = 2 * kMargin + n * kSide;
  const double height = 2 * kMargin + n * kSide * std::sqrt(3.0) / 2.0 + (title.empty() ? 0 : 20);
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
      << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n"
      << "  <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  // pieces: bottom triangles, then each rhombus as its two unit triangles
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= a; ++b) {
      const Point top = vertex(n, a - 1, b - 1);
      const Point left = vertex(n, a, b - 1);
      const Point right = vertex(n, a, b);
      if (a == n) {
        polygon(out, {top, left, right}, fill_for(std::nullopt));
      } else {
        const char* fill = fill_for(pz.branch(b, b + n - a));
        polygon(out, {top, left, vertex(n, a + 1, b), right}, fill);
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b <= a; ++b) {
      edge(out, vertex(n, a, b), vertex(n, a + 1, b), pz.sw(a, b));
      edge(out, vertex(n, a, b), vertex(n, a + 1, b + 1), pz.se(a, b));
    }
  }
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= a; ++b) {
      // a one-piece rhombus has no middle edge
      if (a < n && !pz.hz(a, b)) continue;
      edge(out, vertex(n, a, b - 1), vertex(n, a, b), pz.hz(a, b));
    }
  }
  if (!title.empty()) {
    out << "  <text x=\"" << fmt(kMargin) << "\" y=\"" << fmt(height - 8.0)
        << "\" font-family=\"monospace\" font-size=\"13\">" << title << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string svg_filename(const Boundary& b, int index) {
  char num[16];
  std::snprintf(num, sizeof num, "%03d", index);
  return "puzzle-" + b.mu.str() + "-" + b.nu.str() + "-" + b.lambda.str() + "-" + num + ".svg";
}

}  // namespace puzzle
