#include "swsim/stimulus.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "swsim/error.hpp"
#include "swsim/units.hpp"

namespace swsim {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

struct Token {
  std::string text;
  int col = 0;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size() || line[i] == '#') break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '#') {
      ++i;
    }
    tokens.push_back({std::string(line.substr(start, i - start)),
                      static_cast<int>(start) + 1});
  }
  return tokens;
}

std::int64_t parse_time(const Token& token, int lineno) {
  std::int64_t t;
  try {
    t = units::parse_time_ps(token.text);
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidStimulus, e.raw_message(), lineno, token.col);
  }
  if (t < 0) {
    throw Error(ErrorCode::InvalidStimulus, "time must be >= 0", lineno, token.col);
  }
  return t;
}

LogicValue parse_value(const Token& token, int lineno) {
  std::string v = lower(token.text);
  if (v == "0") return LogicValue::Zero;
  if (v == "1") return LogicValue::One;
  if (v == "x") return LogicValue::X;
  throw Error(ErrorCode::InvalidStimulus,
              "expected 0, 1 or x, got '" + token.text + "'", lineno, token.col);
}

}  // namespace

std::int64_t ClockSpec::high_ps() const {
  return std::llround(static_cast<double>(period_ps) * duty_pct / 100.0);
}

void Stimulus::validate() const {
  for (const StimulusEvent& e : events) {
    if (e.time_ps < 0) {
      throw Error(ErrorCode::InvalidStimulus,
                  "event on '" + e.net + "' has negative time");
    }
    if (e.net.empty()) {
      throw Error(ErrorCode::InvalidStimulus, "event with empty net name");
    }
  }
  std::set<std::string> event_nets;
  for (const StimulusEvent& e : events) event_nets.insert(e.net);
  std::set<std::string> clock_nets;
  for (const ClockSpec& c : clocks) {
    if (c.net.empty()) {
      throw Error(ErrorCode::InvalidStimulus, "clock with empty net name");
    }
    if (c.period_ps <= 0) {
      throw Error(ErrorCode::InvalidStimulus,
                  "clock on '" + c.net + "' needs a positive period");
    }
    if (!(c.duty_pct > 0.0 && c.duty_pct < 100.0)) {
      throw Error(ErrorCode::InvalidStimulus,
                  "clock on '" + c.net + "' needs duty in (0, 100)");
    }
    if (c.phase_ps < 0) {
      throw Error(ErrorCode::InvalidStimulus,
                  "clock on '" + c.net + "' has negative phase");
    }
    if (c.high_ps() <= 0 || c.high_ps() >= c.period_ps) {
      throw Error(ErrorCode::InvalidStimulus,
                  "clock on '" + c.net + "' rounds to a degenerate waveform");
    }
    if (!clock_nets.insert(c.net).second) {
      throw Error(ErrorCode::InvalidStimulus,
                  "net '" + c.net + "' is driven by two clocks");
    }
    if (event_nets.count(c.net)) {
      throw Error(ErrorCode::InvalidStimulus,
                  "net '" + c.net + "' has both a clock and discrete events");
    }
  }
}

Stimulus parse_stimulus(std::string_view text) {
  Stimulus stim;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    const std::string head = lower(tokens[0].text);

    if (head == "at") {
      // at <time> <net> = <0|1|x>
      if (tokens.size() != 5 || tokens[3].text != "=") {
        throw Error(ErrorCode::InvalidStimulus,
                    "expected: at <time> <net> = <0|1|x>", lineno, tokens[0].col);
      }
      StimulusEvent e;
      e.time_ps = parse_time(tokens[1], lineno);
      e.net = lower(tokens[2].text);
      e.value = parse_value(tokens[4], lineno);
      stim.events.push_back(std::move(e));
    } else if (head == "clock") {
      // clock <net> period <time> duty <pct> [phase <time>]
      if (tokens.size() != 6 && tokens.size() != 8) {
        throw Error(ErrorCode::InvalidStimulus,
                    "expected: clock <net> period <time> duty <pct> [phase <time>]",
                    lineno, tokens[0].col);
      }
      ClockSpec c;
      c.net = lower(tokens[1].text);
      if (lower(tokens[2].text) != "period") {
        throw Error(ErrorCode::InvalidStimulus, "expected 'period'", lineno,
                    tokens[2].col);
      }
      c.period_ps = parse_time(tokens[3], lineno);
      if (lower(tokens[4].text) != "duty") {
        throw Error(ErrorCode::InvalidStimulus, "expected 'duty'", lineno,
                    tokens[4].col);
      }
      std::string pct = tokens[5].text;
      if (!pct.empty() && pct.back() == '%') pct.pop_back();
      try {
        c.duty_pct = units::parse_si(pct);
      } catch (const Error& e) {
        throw Error(ErrorCode::InvalidStimulus, e.raw_message(), lineno, tokens[5].col);
      }
      if (tokens.size() == 8) {
        if (lower(tokens[6].text) != "phase") {
          throw Error(ErrorCode::InvalidStimulus, "expected 'phase'", lineno,
                      tokens[6].col);
        }
        c.phase_ps = parse_time(tokens[7], lineno);
      }
      stim.clocks.push_back(std::move(c));
    } else {
      throw Error(ErrorCode::InvalidStimulus,
                  "unrecognized directive '" + tokens[0].text + "'", lineno,
                  tokens[0].col);
    }
  }
  stim.validate();
  return stim;
}

LogicValue clock_value_at(const ClockSpec& clock, std::int64_t time_ps) {
  if (time_ps < clock.phase_ps) return LogicValue::Zero;
  std::int64_t offset = (time_ps - clock.phase_ps) % clock.period_ps;
  return offset < clock.high_ps() ? LogicValue::One : LogicValue::Zero;
}

std::vector<StimulusEvent> expand_clock(const ClockSpec& clock,
                                        std::int64_t duration_ps) {
  std::vector<StimulusEvent> events;
  if (duration_ps <= 0) return events;
  events.push_back({0, clock.net, clock_value_at(clock, 0)});
  const std::int64_t high = clock.high_ps();
  for (std::int64_t rise = clock.phase_ps; rise < duration_ps;
       rise += clock.period_ps) {
    if (rise > 0) events.push_back({rise, clock.net, LogicValue::One});
    std::int64_t fall = rise + high;
    if (fall > 0 && fall < duration_ps) {
      events.push_back({fall, clock.net, LogicValue::Zero});
    }
  }
  std::sort(events.begin(), events.end(),
            [](const StimulusEvent& a, const StimulusEvent& b) {
              return a.time_ps < b.time_ps;
            });
  return events;
}

}  // namespace swsim
