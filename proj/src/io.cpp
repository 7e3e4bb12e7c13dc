#include "pentagon/io.hpp"

#include <charconv>
#include <optional>
#include <vector>

namespace pentagon {

  namespace {
    struct Line {
      std::size_t      number;
      std::string_view text;
    };

    std::string_view trim(std::string_view s) {
      auto const ws = " \t\r";
      auto       b  = s.find_first_not_of(ws);
      if (b == std::string_view::npos) {
        return {};
      }
      return s.substr(b, s.find_last_not_of(ws) - b + 1);
    }

    // Non-blank, non-comment lines with their 1-based numbers.
    std::vector<Line> content_lines(std::string_view text) {
      std::vector<Line> out;
      std::size_t       number = 0;
      while (!text.empty()) {
        ++number;
        auto end  = text.find('\n');
        auto line = trim(text.substr(0, end));
        text      = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
        if (!line.empty() && line.front() != '#') {
          out.push_back({number, line});
        }
      }
      return out;
    }

    std::vector<std::string_view> split(std::string_view s) {
      std::vector<std::string_view> out;
      std::size_t                   i = 0;
      while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) {
          ++i;
        }
        auto j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') {
          ++j;
        }
        if (j > i) {
          out.push_back(s.substr(i, j - i));
        }
        i = j;
      }
      return out;
    }

    std::size_t to_number(std::string_view token, std::size_t line) {
      std::size_t value = 0;
      auto [ptr, ec]    = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
      }
      return value;
    }
  }  // namespace

  SolutionTable parse_solution(std::string_view text) {
    auto lines = content_lines(text);
    if (lines.empty() || lines[0].text != solution_magic) {
      throw ParseError(lines.empty() ? 1 : lines[0].number,
                       "expected header '" + std::string(solution_magic) + "'");
    }
    if (lines.size() < 2) {
      throw ParseError(lines[0].number + 1, "expected 'size <n>'");
    }
    auto size_tokens = split(lines[1].text);
    if (size_tokens.size() != 2 || size_tokens[0] != "size") {
      throw ParseError(lines[1].number, "expected 'size <n>'");
    }
    auto const n = to_number(size_tokens[1], lines[1].number);
    if (n == 0) {
      throw ParseError(lines[1].number, "size must be positive");
    }
    if (n > 4096) {
      throw ParseError(lines[1].number, "size " + std::to_string(n) + " is too large");
    }

    std::vector<Pair>        entries(n * n);
    std::vector<std::size_t> defined_at(n * n, 0);
    for (std::size_t r = 2; r < lines.size(); ++r) {
      auto const& [number, row] = lines[r];
      auto tokens               = split(row);
      if (tokens.size() != 4) {
        throw ParseError(number, "expected four indices '<i> <j> <k> <l>'");
      }
      std::size_t v[4];
      for (std::size_t t = 0; t < 4; ++t) {
        v[t] = to_number(tokens[t], number);
        if (v[t] >= n) {
          throw ParseError(number, "index " + std::to_string(v[t]) + " out of range for size "
                                       + std::to_string(n));
        }
      }
      auto const p = v[0] * n + v[1];
      if (defined_at[p] != 0) {
        throw ParseError(number, "duplicate row for (" + std::to_string(v[0]) + ", "
                                     + std::to_string(v[1]) + "), first given on line "
                                     + std::to_string(defined_at[p]));
      }
      defined_at[p] = number;
      entries[p]    = Pair{static_cast<index_t>(v[2]), static_cast<index_t>(v[3])};
    }
    for (std::size_t p = 0; p < n * n; ++p) {
      if (defined_at[p] == 0) {
        throw ParseError(0, "missing row for (" + std::to_string(p / n) + ", "
                                + std::to_string(p % n) + "); expected " + std::to_string(n * n)
                                + " rows");
      }
    }
    return SolutionTable(n, std::move(entries));
  }

  std::string emit_solution(SolutionTable const& s) {
    std::string out(solution_magic);
    out += "\nsize " + std::to_string(s.size()) + "\n";
    for (index_t i = 0; i < s.size(); ++i) {
      for (index_t j = 0; j < s.size(); ++j) {
        auto [k, l] = s(i, j);
        out += std::to_string(i) + ' ' + std::to_string(j) + ' ' + std::to_string(k) + ' '
               + std::to_string(l) + '\n';
      }
    }
    return out;
  }

  SigmaMap parse_sigma(std::string_view text, std::size_t x_size, std::size_t a_dim) {
    auto const               expected = std::size_t(1) << a_dim;
    auto                     lines    = content_lines(text);
    std::vector<Permutation> sigmas;
    for (auto const& [number, row] : lines) {
      std::vector<index_t> images;
      for (auto token : split(row)) {
        images.push_back(static_cast<index_t>(to_number(token, number)));
      }
      if (images.size() != x_size) {
        throw ParseError(number, "expected " + std::to_string(x_size) + " images, got "
                                     + std::to_string(images.size()));
      }
      try {
        sigmas.emplace_back(std::move(images));
      } catch (InvalidTable const& e) {
        throw ParseError(number, e.what());
      }
    }
    if (sigmas.size() != expected) {
      throw ParseError(0, "expected " + std::to_string(expected) + " permutation lines, got "
                              + std::to_string(sigmas.size()));
    }
    return SigmaMap(a_dim, x_size, std::move(sigmas));
  }

  Permutation parse_cycles(std::string_view text, std::size_t n) {
    std::vector<std::vector<index_t>> cycles;
    std::size_t                       i = 0;
    text                                = trim(text);
    while (i < text.size()) {
      if (text[i] == ' ') {
        ++i;
        continue;
      }
      if (text[i] != '(') {
        throw ParseError(1, "expected '(' in cycle notation");
      }
      auto close = text.find(')', i);
      if (close == std::string_view::npos) {
        throw ParseError(1, "unterminated cycle");
      }
      std::vector<index_t> cycle;
      for (auto token : split(text.substr(i + 1, close - i - 1))) {
        std::string_view rest = token;
        // Allow comma separators.
        while (!rest.empty()) {
          auto comma = rest.find(',');
          auto part  = rest.substr(0, comma);
          if (!part.empty()) {
            cycle.push_back(static_cast<index_t>(to_number(part, 1)));
          }
          rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        }
      }
      if (!cycle.empty()) {
        cycles.push_back(std::move(cycle));
      }
      i = close + 1;
    }
    try {
      return Permutation::from_cycles(n, cycles);
    } catch (InvalidTable const& e) {
      throw ParseError(1, e.what());
    }
  }

}  // namespace pentagon
