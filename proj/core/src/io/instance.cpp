#include "sugartax/io/instance.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <vector>

namespace sugartax::io {

InstanceError::InstanceError(std::string source, std::size_t line, const std::string& message)
    : std::runtime_error(source + (line > 0 ? ":" + std::to_string(line) : std::string()) + ": " + message),
      line_(line) {}

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(std::string_view(line).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return fields;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

struct Row {
  std::size_t line;
  std::vector<std::string> fields;
};

struct ConsumerRow {
  std::size_t line;
  std::string consumer;
  std::string product;
  Rational beta;
  Rational sensitivity;
  Rational demand;
};

class Parser {
 public:
  explicit Parser(std::string_view source) : source_(source) {}

  [[noreturn]] void fail(std::size_t line, const std::string& message) const {
    throw InstanceError(source_, line, message);
  }

  Rational number(const Row& row, std::size_t field, std::string_view what) const {
    try {
      return parse_rational(row.fields[field]);
    } catch (const std::invalid_argument&) {
      fail(row.line, "bad " + std::string(what) + " '" + row.fields[field] + "'");
    }
  }

  Market parse(std::istream& in) {
    std::map<std::string, std::vector<Row>> sections;
    std::map<std::string, std::size_t> section_line;
    std::string current;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
      ++line_no;
      const std::string line = trim(raw);
      if (line.empty() || line.front() == '#') continue;
      if (line.front() == '[') {
        if (line.back() != ']') fail(line_no, "unterminated section header");
        current = lower(trim(line.substr(1, line.size() - 2)));
        if (current != "products" && current != "consumers" && current != "globals") {
          fail(line_no, "unknown section [" + current + "]");
        }
        if (!section_line.emplace(current, line_no).second) fail(line_no, "repeated section [" + current + "]");
        sections[current];
        continue;
      }
      if (current.empty()) fail(line_no, "data before any section header");
      sections[current].push_back(Row{line_no, split_fields(line)});
    }

    if (!sections.count("products")) fail(0, "missing [products] section");
    if (!sections.count("consumers")) fail(0, "missing [consumers] section");

    const auto globals = parse_globals(sections["globals"]);
    std::vector<Product> products = parse_products(sections["products"], section_line["products"]);
    std::vector<Consumer> consumers = parse_consumers(sections["consumers"], section_line["consumers"], products, globals);
    try {
      return Market(std::move(products), std::move(consumers));
    } catch (const ModelError& e) {
      fail(0, e.what());
    }
  }

 private:
  struct Globals {
    Rational beta1, beta2, nr_claims, nutr_val;
  };

  void expect_header(const std::vector<Row>& rows, std::size_t section, std::vector<std::string> names) const {
    if (rows.empty()) fail(section, "section has no header row");
    std::vector<std::string> got;
    for (const auto& f : rows.front().fields) got.push_back(lower(f));
    if (got != names) {
      std::string want;
      for (const auto& n : names) want += (want.empty() ? "" : ",") + n;
      fail(rows.front().line, "expected header '" + want + "'");
    }
  }

  Globals parse_globals(const std::vector<Row>& rows) const {
    Globals g;
    if (rows.empty()) return g;
    expect_header(rows, rows.front().line, {"name", "value"});
    std::map<std::string, bool> seen;
    for (std::size_t r = 1; r < rows.size(); ++r) {
      const Row& row = rows[r];
      if (row.fields.size() != 2) fail(row.line, "expected 2 fields");
      const std::string name = lower(row.fields[0]);
      if (!seen.emplace(name, true).second) fail(row.line, "duplicate global '" + name + "'");
      Rational value = number(row, 1, name);
      if (name == "beta1") {
        g.beta1 = value;
      } else if (name == "beta2") {
        g.beta2 = value;
      } else if (name == "nr_claims") {
        g.nr_claims = value;
      } else if (name == "nutr_val") {
        g.nutr_val = value;
      } else {
        fail(row.line, "unknown global '" + row.fields[0] + "'");
      }
    }
    return g;
  }

  std::vector<Product> parse_products(const std::vector<Row>& rows, std::size_t section) const {
    expect_header(rows, section, {"id", "taxed"});
    std::vector<Product> products;
    for (std::size_t r = 1; r < rows.size(); ++r) {
      const Row& row = rows[r];
      if (row.fields.size() != 2) fail(row.line, "expected 2 fields");
      if (row.fields[0].empty()) fail(row.line, "empty product id");
      for (const Product& p : products) {
        if (p.id == row.fields[0]) fail(row.line, "duplicate product '" + p.id + "'");
      }
      const std::string flag = lower(row.fields[1]);
      bool taxed = false;
      if (flag == "true" || flag == "1" || flag == "yes") {
        taxed = true;
      } else if (flag != "false" && flag != "0" && flag != "no") {
        fail(row.line, "bad taxed flag '" + row.fields[1] + "'");
      }
      products.push_back(Product{row.fields[0], products.size(), taxed});
    }
    if (products.empty()) fail(section, "no products");
    return products;
  }

  std::vector<Consumer> parse_consumers(const std::vector<Row>& rows, std::size_t section,
                                        const std::vector<Product>& products, const Globals& g) const {
    expect_header(rows, section, {"consumer", "product", "beta", "sensitivity", "demand"});
    const std::size_t m = products.size();
    std::vector<Consumer> consumers;
    std::vector<std::vector<bool>> covered;
    std::map<std::string, std::size_t> consumer_index;

    for (std::size_t r = 1; r < rows.size(); ++r) {
      const Row& row = rows[r];
      if (row.fields.size() != 5) fail(row.line, "expected 5 fields");
      const std::string& cid = row.fields[0];
      if (cid.empty()) fail(row.line, "empty consumer id");
      const auto product = std::find_if(products.begin(), products.end(),
                                        [&](const Product& p) { return p.id == row.fields[1]; });
      if (product == products.end()) fail(row.line, "unknown product '" + row.fields[1] + "'");

      const Rational beta = number(row, 2, "beta");
      const Rational sensitivity = number(row, 3, "sensitivity");
      const Rational demand = number(row, 4, "demand");
      if (sensitivity <= 0) fail(row.line, "price sensitivity must be positive, got " + row.fields[3]);
      if (demand < 0) fail(row.line, "demand must be nonnegative, got " + row.fields[4]);

      auto [it, inserted] = consumer_index.emplace(cid, consumers.size());
      if (inserted) {
        consumers.push_back(Consumer{cid, std::vector<LinearUtility>(m), std::vector<Rational>(m)});
        covered.emplace_back(m, false);
      }
      const std::size_t i = it->second;
      const std::size_t j = product->index;
      if (covered[i][j]) fail(row.line, "duplicate row for consumer '" + cid + "' and product '" + product->id + "'");
      covered[i][j] = true;
      consumers[i].utilities[j] =
          LinearUtility{effective_intercept(beta, g.beta1, g.beta2, g.nr_claims, g.nutr_val), sensitivity};
      consumers[i].demands[j] = demand;
    }

    for (std::size_t i = 0; i < consumers.size(); ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (!covered[i][j]) {
          fail(section, "consumer '" + consumers[i].id + "' has no row for product '" + products[j].id + "'");
        }
      }
    }
    return consumers;
  }

  std::string source_;
};

}  // namespace

Market parse_instance(std::istream& in, std::string_view source) { return Parser(source).parse(in); }

Market load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InstanceError(path.string(), 0, "cannot open file");
  return parse_instance(in, path.string());
}

void write_instance(std::ostream& out, const Market& market) {
  out << "[products]\nid,taxed\n";
  for (const Product& p : market.products()) out << p.id << ',' << (p.taxed ? "true" : "false") << '\n';
  out << "\n[consumers]\nconsumer,product,beta,sensitivity,demand\n";
  for (const Consumer& c : market.consumers()) {
    for (std::size_t j = 0; j < market.product_count(); ++j) {
      out << c.id << ',' << market.products()[j].id << ',' << to_exact_string(c.utilities[j].intercept) << ','
          << to_exact_string(c.utilities[j].sensitivity) << ',' << to_exact_string(c.demands[j]) << '\n';
    }
  }
}

}  // namespace sugartax::io
