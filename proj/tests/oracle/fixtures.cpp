#include "oracle/fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace tquery::testing {

TreeArray leaves(std::vector<Scalar> values) {
  std::vector<Tree> elements;
  elements.reserve(values.size());
  for (Scalar& v : values) {
    elements.push_back(Tree::leaf(std::move(v)));
  }
  return TreeArray(std::move(elements));
}

Tree record(std::vector<Branch> branches) { return Tree::make(Scalar(), std::move(branches)); }

namespace {

Tree day_record(int date, std::vector<Scalar> temperatures, std::vector<Scalar> heart_rates) {
  return record({Branch{"date", leaves({Scalar(date)})},
                 Branch{"t", leaves(std::move(temperatures))},
                 Branch{"hr", leaves(std::move(heart_rates))}});
}

Tree session(const char* start, const char* end, const char* quality) {
  return record({Branch{"s", leaves({Scalar(start)})},
                 Branch{"e", leaves({Scalar(end)})},
                 Branch{"q", leaves({Scalar(quality)})}});
}

Tree day_log(int day, std::vector<Tree> sessions) {
  return record({Branch{"d", leaves({Scalar(day)})},
                 Branch{"L", TreeArray(std::move(sessions))}});
}

Tree month_log(int month, std::vector<Tree> days) {
  return record({Branch{"m", leaves({Scalar(month)})},
                 Branch{"D", TreeArray(std::move(days))}});
}

Tree year_log(int year, std::vector<Tree> months) {
  return record({Branch{"y", leaves({Scalar(year)})},
                 Branch{"M", TreeArray(std::move(months))}});
}

Fixtures build() {
  Fixtures f;

  f.biometric = TreeArray({
      day_record(20181128, {Scalar(36), Scalar(35), Scalar(34)}, {Scalar(65), Scalar(61), Scalar(62)}),
      day_record(20181129, {Scalar(37), Scalar(35), Scalar(34)}, {Scalar(64), Scalar(61), Scalar(62)}),
      day_record(20181130, {Scalar(36), Scalar(35), Scalar(34)}, {Scalar(66), Scalar(61), Scalar(62)}),
      day_record(20181126, {Scalar(35), Scalar(34), Scalar(33)}, {Scalar(60), Scalar(61), Scalar(62)}),
      day_record(20181127, {Scalar(34), Scalar(33), Scalar(32)}, {Scalar(59), Scalar(61), Scalar(62)}),
  });

  Tree november = month_log(
      11, {
              day_log(29, {session("21:01", "22:12", "good"), session("22:36", "22:58", "good"),
                           session("23:00", "23:30", "fair"), session("23:40", "23:55", "fair")}),
              day_log(30, {session("20:33", "22:12", "poor"), session("22:30", "23:10", "fair"),
                           session("23:20", "23:50", "fair")}),
              day_log(27, {session("22:00", "23:00", "fair")}),
              day_log(28, {session("22:15", "23:20", "fair")}),
          });

  f.sleeplog = TreeArray({
      year_log(2018, {month_log(9, {day_log(15, {session("23:05", "23:45", "fair")})}),
                      month_log(10, {day_log(15, {session("23:10", "23:50", "fair")})}),
                      std::move(november)}),
      year_log(2017, {month_log(6, {day_log(15, {session("22:40", "23:20", "fair")})})}),
      year_log(2016, {month_log(6, {day_log(15, {session("22:50", "23:30", "fair")})})}),
  });

  return f;
}

}  // namespace

const Fixtures& fixtures() {
  static const Fixtures instance = build();
  return instance;
}

std::string fixture_path(const std::string& name) {
  return std::string(TQUERY_FIXTURE_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

}  // namespace tquery::testing
