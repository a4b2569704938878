#include "goodsemi/render.hpp"

#include <sstream>

namespace goodsemi {

namespace {

std::string ascii(const Representation& e, const Box& w, const RenderOptions& opt) {
    std::string out;
    for (Coord y = w.hi()[1]; y >= w.lo()[1]; --y) {
        for (Coord x = w.lo()[0]; x <= w.hi()[0]; ++x) {
            const Point p{x, y};
            char c = e.contains(p) ? '#' : '.';
            if (opt.mark_extremes && p == e.mu()) c = 'M';
            if (opt.mark_extremes && p == e.conductor()) c = 'G';
            out += c;
        }
        out += '\n';
    }
    return out;
}

std::string svg(const Representation& e, const Box& w, const RenderOptions& opt) {
    constexpr int cell = 24, margin = 28;
    const Coord cols = w.hi()[0] - w.lo()[0] + 1, rows = w.hi()[1] - w.lo()[1] + 1;
    const Coord width = cols * cell + 2 * margin, height = rows * cell + 2 * margin;
    const Box small_box = e.box();
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
       << "<title>staircase mu=" << e.mu().str() << " gamma=" << e.conductor().str() << "</title>\n"
       << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"#ffffff\"/>\n";
    for (Coord y = w.hi()[1]; y >= w.lo()[1]; --y) {
        for (Coord x = w.lo()[0]; x <= w.hi()[0]; ++x) {
            const Point p{x, y};
            const Coord px = margin + (x - w.lo()[0]) * cell, py = margin + (w.hi()[1] - y) * cell;
            const bool member = e.contains(p);
            const char* fill = !member ? "#f4f4f4" : small_box.contains(p) ? "#2b6cb0" : "#4a4a4a";
            os << "<rect x=\"" << px << "\" y=\"" << py << "\" width=\"" << cell << "\" height=\"" << cell
               << "\" fill=\"" << fill << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
            const char* label = nullptr;
            if (opt.mark_extremes && p == e.mu()) label = "M";
            if (opt.mark_extremes && p == e.conductor()) label = "G";
            if (label)
                os << "<text x=\"" << px + cell / 2 << "\" y=\"" << py + cell / 2 + 5
                   << "\" font-family=\"monospace\" font-size=\"14\" text-anchor=\"middle\" fill=\"#ffd400\">" << label
                   << "</text>\n";
        }
    }
    // axis ticks along the bottom and left edges
    for (Coord x = w.lo()[0]; x <= w.hi()[0]; ++x)
        os << "<text x=\"" << margin + (x - w.lo()[0]) * cell + cell / 2 << "\" y=\"" << height - margin / 3
           << "\" font-family=\"monospace\" font-size=\"10\" text-anchor=\"middle\">" << x << "</text>\n";
    for (Coord y = w.lo()[1]; y <= w.hi()[1]; ++y)
        os << "<text x=\"" << margin / 2 << "\" y=\"" << margin + (w.hi()[1] - y) * cell + cell / 2 + 4
           << "\" font-family=\"monospace\" font-size=\"10\" text-anchor=\"middle\">" << y << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace

std::string render_staircase(const Representation& e, const Box& window, RenderFormat format,
                             const RenderOptions& options) {
    if (e.dim() != 2 || window.dim() != 2) throw DimensionMismatch("staircase rendering needs s = 2");
    return format == RenderFormat::ascii ? ascii(e, window, options) : svg(e, window, options);
}

}  // namespace goodsemi
