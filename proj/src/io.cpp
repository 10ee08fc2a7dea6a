#include "hamdisc/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace hamdisc {

namespace {

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

int parse_header(std::istream& in, const char* what) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument(std::string(what) + ": missing header line");
  }
  line = strip_cr(line);
  if (line.rfind("n=", 0) != 0) {
    throw std::invalid_argument(std::string(what) + ": header must be 'n=<dimension>'");
  }
  int n = 0;
  try {
    n = std::stoi(line.substr(2));
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(what) + ": bad dimension in header");
  }
  if (n < 1 || n > kMaxDimension) {
    throw std::invalid_argument(std::string(what) + ": dimension out of range");
  }
  return n;
}

}  // namespace

Code read_code(std::istream& in) {
  const int n = parse_header(in, "code file");
  std::vector<uint64_t> words;
  std::string line;
  while (std::getline(in, line)) {
    line = strip_cr(line);
    if (line.empty()) continue;
    const Word word = Word::parse(line);
    if (word.dimension() != n) {
      throw std::invalid_argument("code file: word length does not match header");
    }
    words.push_back(word.bits());
  }
  return Code(n, std::move(words));  // rejects duplicates
}

Code read_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open code file: " + path);
  return read_code(in);
}

void write_code(std::ostream& out, const Code& code) {
  out << "n=" << code.dimension() << '\n';
  for (std::size_t i = 0; i < code.size(); ++i) {
    out << code.word(i).to_string() << '\n';
  }
}

void write_code_file(const std::string& path, const Code& code) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  write_code(out, code);
}

WeightVector read_weights(std::istream& in) {
  const int n = parse_header(in, "weight file");
  std::vector<Rational> weights;
  weights.reserve(static_cast<std::size_t>(n));
  std::string line;
  while (std::getline(in, line) && weights.size() < static_cast<std::size_t>(n)) {
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto value = parse_rational(line);
    if (!value) throw std::invalid_argument("weight file: bad rational '" + line + "'");
    weights.push_back(*value);
  }
  if (weights.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("weight file: expected n weights");
  }
  return WeightVector(n, std::move(weights));
}

WeightVector read_weights_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open weight file: " + path);
  return read_weights(in);
}

WeightVector weights_from_spec(const std::string& spec, int n) {
  if (spec == "uniform") return WeightVector::uniform(n);
  if (spec == "hemisphere") return WeightVector::hemisphere(n);
  if (spec.rfind("cutoff:", 0) == 0) {
    const auto beta = parse_rational(spec.substr(7));
    if (!beta) throw std::invalid_argument("weights: bad cutoff value in '" + spec + "'");
    return WeightVector::cutoff(n, *beta);
  }
  if (spec.rfind("file:", 0) == 0) {
    WeightVector weights = read_weights_file(spec.substr(5));
    if (weights.dimension() != n) {
      throw std::invalid_argument("weights: file dimension does not match the code");
    }
    return weights;
  }
  throw std::invalid_argument("weights: unknown selector '" + spec + "'");
}

}  // namespace hamdisc
