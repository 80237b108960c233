#include "fsc/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fsc {

namespace {

struct Frame {
  double sx0, sx1;  // sigma range
  double sy0, sy1;  // 1/a range
  static constexpr double width = 560, height = 420, margin = 56;

  double X(double sigma) const {
    return margin + (sigma - sx0) / (sx1 - sx0) * (width - 2 * margin);
  }
  double Y(double inv_a) const {
    return height - margin - (inv_a - sy0) / (sy1 - sy0) * (height - 2 * margin);
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

Frame frame_for(const RegionPolygon& poly) {
  double sx0 = 1e300, sx1 = -1e300, sy0 = 0.0, sy1 = 1.0;
  for (const auto& [sigma, inv_a] : poly.vertices) {
    sx0 = std::min(sx0, to_double(sigma));
    sx1 = std::max(sx1, to_double(sigma));
    sy0 = std::min(sy0, to_double(inv_a));
    sy1 = std::max(sy1, to_double(inv_a));
  }
  const double pad_x = std::max(0.5, 0.15 * (sx1 - sx0));
  const double pad_y = std::max(0.15, 0.15 * (sy1 - sy0));
  return Frame{sx0 - pad_x, sx1 + pad_x, sy0 - pad_y, sy1 + pad_y};
}

void draw_region(std::ostringstream& svg, const Frame& fr, const RegionPolygon& poly) {
  // unit strip
  svg << "<line x1='" << fmt(fr.X(fr.sx0)) << "' y1='" << fmt(fr.Y(0)) << "' x2='"
      << fmt(fr.X(fr.sx1)) << "' y2='" << fmt(fr.Y(0))
      << "' stroke='#999' stroke-dasharray='2,4'/>\n";
  svg << "<line x1='" << fmt(fr.X(fr.sx0)) << "' y1='" << fmt(fr.Y(1)) << "' x2='"
      << fmt(fr.X(fr.sx1)) << "' y2='" << fmt(fr.Y(1))
      << "' stroke='#999' stroke-dasharray='2,4'/>\n";
  svg << "<text x='" << fmt(fr.X(fr.sx0) + 4) << "' y='" << fmt(fr.Y(0) - 4)
      << "' font-size='11' fill='#777'>1/a=0</text>\n";
  svg << "<text x='" << fmt(fr.X(fr.sx0) + 4) << "' y='" << fmt(fr.Y(1) - 4)
      << "' font-size='11' fill='#777'>1/a=1</text>\n";

  if (poly.vertices.size() >= 3) {
    svg << "<polygon points='";
    for (const auto& [sigma, inv_a] : poly.vertices)
      svg << fmt(fr.X(to_double(sigma))) << "," << fmt(fr.Y(to_double(inv_a))) << " ";
    svg << "' fill='#cfe2f3' stroke='none' fill-opacity='0.85'/>\n";
    for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
      const auto& a = poly.vertices[i];
      const auto& b = poly.vertices[(i + 1) % poly.vertices.size()];
      const bool fine = i < poly.edges.size() && !poly.edges[i].fine_condition.empty();
      svg << "<line x1='" << fmt(fr.X(to_double(a.first))) << "' y1='"
          << fmt(fr.Y(to_double(a.second))) << "' x2='" << fmt(fr.X(to_double(b.first)))
          << "' y2='" << fmt(fr.Y(to_double(b.second))) << "' stroke='#1f4e79' stroke-width='2'"
          << (fine ? " stroke-dasharray='6,3'" : "") << "/>\n";
    }
  } else if (poly.vertices.size() == 2) {
    const auto& a = poly.vertices[0];
    const auto& b = poly.vertices[1];
    svg << "<line x1='" << fmt(fr.X(to_double(a.first))) << "' y1='"
        << fmt(fr.Y(to_double(a.second))) << "' x2='" << fmt(fr.X(to_double(b.first)))
        << "' y2='" << fmt(fr.Y(to_double(b.second)))
        << "' stroke='#1f4e79' stroke-width='3'/>\n";
  } else if (poly.vertices.size() == 1) {
    svg << "<circle cx='" << fmt(fr.X(to_double(poly.vertices[0].first))) << "' cy='"
        << fmt(fr.Y(to_double(poly.vertices[0].second)))
        << "' r='4' fill='#1f4e79'/>\n";
  }
}

std::string document(const std::string& body) {
  std::ostringstream svg;
  svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << Frame::width << "' height='"
      << Frame::height << "' viewBox='0 0 " << Frame::width << " " << Frame::height << "'>\n"
      << "<rect width='100%' height='100%' fill='white'/>\n"
      << body << "</svg>\n";
  return svg.str();
}

}  // namespace

std::string region_svg(const OperatorClass& op) {
  const RegionPolygon poly = region_polygon(op);
  const Frame fr = frame_for(poly);
  std::ostringstream body;
  draw_region(body, fr, poly);

  // canonical L^2 point
  const double sig = (op.d + op.d0) / 2.0;
  body << "<rect x='" << fmt(fr.X(sig) - 3) << "' y='" << fmt(fr.Y(0.5) - 3)
       << "' width='6' height='6' fill='#b45309'/>\n";
  body << "<text x='" << fmt(fr.X(sig) + 6) << "' y='" << fmt(fr.Y(0.5) - 6)
       << "' font-size='11'>((d+d0)/2, 2)</text>\n";
  body << "<text x='" << fmt(Frame::width / 2 - 40) << "' y='" << fmt(Frame::height - 16)
       << "' font-size='12'>sigma</text>\n";
  body << "<text x='12' y='" << fmt(Frame::height / 2) << "' font-size='12'>1/a</text>\n";
  return document(body.str());
}

std::string bootstrap_svg(const OperatorClass& op, const BootstrapPath& path) {
  const RegionPolygon poly = region_polygon(op);
  Frame fr = frame_for(poly);
  for (const BootstrapStep& st : path.steps) {
    fr.sx0 = std::min(fr.sx0, to_double(st.from.sigma) - 0.3);
    fr.sy0 = std::min(fr.sy0, to_double(st.from.inv_a) - 0.05);
  }

  std::ostringstream body;
  draw_region(body, fr, poly);

  body << "<polyline fill='none' stroke='#b91c1c' stroke-width='2' points='";
  if (!path.steps.empty())
    body << fmt(fr.X(to_double(path.steps.front().from.sigma))) << ","
         << fmt(fr.Y(to_double(path.steps.front().from.inv_a))) << " ";
  for (const BootstrapStep& st : path.steps)
    body << fmt(fr.X(to_double(st.to.sigma))) << "," << fmt(fr.Y(to_double(st.to.inv_a)))
         << " ";
  body << "'/>\n";

  if (!path.steps.empty()) {
    const auto& seed = path.steps.front().from;
    body << "<circle cx='" << fmt(fr.X(to_double(seed.sigma))) << "' cy='"
         << fmt(fr.Y(to_double(seed.inv_a))) << "' r='4' fill='#b91c1c'/>\n";
  }
  for (const BootstrapStep& st : path.steps) {
    body << "<circle cx='" << fmt(fr.X(to_double(st.to.sigma))) << "' cy='"
         << fmt(fr.Y(to_double(st.to.inv_a))) << "' r='3' fill='#7f1d1d'>"
         << "<title>" << st.stage << "</title></circle>\n";
  }
  const auto& tgt = path.target;
  body << "<rect x='" << fmt(fr.X(to_double(tgt.sigma)) - 4) << "' y='"
       << fmt(fr.Y(to_double(tgt.inv_a)) - 4)
       << "' width='8' height='8' fill='none' stroke='#b91c1c' stroke-width='2'/>\n";
  return document(body.str());
}

}  // namespace fsc
