#include "rp2/diagram_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rp2 {

namespace {

[[noreturn]] void bad(const std::string& why) { throw Error(ErrorCode::ParseError, why); }

// Minimal document tree. Numbers keep their literal text so integers of any
// size survive; nlohmann hands over-long integers to number_float together
// with the raw token.
struct Node {
  enum class Type { Null, Bool, Number, String, Array, Object } type = Type::Null;
  std::string text;  // number literal or string value
  std::vector<Node> items;
  std::vector<std::pair<std::string, Node>> members;
};

class TreeBuilder : public nlohmann::json_sax<nlohmann::json> {
 public:
  Node root;

  bool null() override { return put(Node{}); }
  bool boolean(bool) override { return put(Node{Node::Type::Bool, {}, {}, {}}); }
  bool number_integer(number_integer_t v) override { return number(std::to_string(v)); }
  bool number_unsigned(number_unsigned_t v) override { return number(std::to_string(v)); }
  bool number_float(number_float_t, const string_t& s) override { return number(s); }
  bool string(string_t& s) override { return put(Node{Node::Type::String, s, {}, {}}); }
  bool binary(binary_t&) override { return put(Node{}); }
  bool start_object(std::size_t) override { return open(Node::Type::Object); }
  bool end_object() override { return close(); }
  bool start_array(std::size_t) override { return open(Node::Type::Array); }
  bool end_array() override { return close(); }
  bool key(string_t& k) override {
    pending_key_ = k;
    return true;
  }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception& ex) override {
    error_ = ex.what();
    return false;
  }
  const std::string& error() const { return error_; }

 private:
  std::vector<Node> stack_;
  std::vector<std::string> keys_;
  std::string pending_key_;
  std::string error_;

  bool number(const std::string& literal) { return put(Node{Node::Type::Number, literal, {}, {}}); }

  bool put(Node n) {
    if (stack_.empty()) {
      root = std::move(n);
    } else if (stack_.back().type == Node::Type::Array) {
      stack_.back().items.push_back(std::move(n));
    } else {
      stack_.back().members.emplace_back(pending_key_, std::move(n));
    }
    return true;
  }
  bool open(Node::Type t) {
    keys_.push_back(pending_key_);
    Node n;
    n.type = t;
    stack_.push_back(std::move(n));
    return true;
  }
  bool close() {
    Node n = std::move(stack_.back());
    stack_.pop_back();
    pending_key_ = keys_.back();
    keys_.pop_back();
    return put(std::move(n));
  }
};

const Node& member(const Node& obj, const std::string& key, const std::string& where) {
  if (obj.type != Node::Type::Object) bad(where + " must be an object");
  const Node* found = nullptr;
  for (const auto& [k, v] : obj.members) {
    if (k == key) {
      if (found) bad(where + " repeats key \"" + key + "\"");
      found = &v;
    }
  }
  if (!found) bad(where + " lacks key \"" + key + "\"");
  return *found;
}

const std::vector<Node>& array(const Node& n, const std::string& where) {
  if (n.type != Node::Type::Array) bad(where + " must be an array");
  return n.items;
}

mpz_class integer(const Node& n, const std::string& where) {
  if (n.type != Node::Type::Number) bad(where + " must be an integer");
  const std::string& s = n.text;
  const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (start == s.size() || s.find_first_not_of("0123456789", start) != std::string::npos) {
    bad(where + " must be an integer, got " + s);
  }
  return mpz_class(s, 10);
}

RatPoint point(const Node& n, const std::string& where) {
  const auto& v = array(n, where);
  if (v.size() != 4) bad(where + " must be [xn, xd, yn, yd]");
  mpz_class c[4];
  for (int k = 0; k < 4; ++k) c[k] = integer(v[k], where);
  if (c[1] == 0 || c[3] == 0) bad(where + " has a zero denominator");
  Rat x(c[0], c[1]);
  Rat y(c[2], c[3]);
  x.canonicalize();
  y.canonicalize();
  return {x, y};
}

void write_point(std::string& out, const RatPoint& p) {
  out += '[';
  out += p.x.get_num().get_str();
  out += ',';
  out += p.x.get_den().get_str();
  out += ',';
  out += p.y.get_num().get_str();
  out += ',';
  out += p.y.get_den().get_str();
  out += ']';
}

}  // namespace

std::string to_json(const BouquetDiagram& d) {
  std::string out = "{\n  \"n\": " + std::to_string(d.n()) + ",\n  \"vertex\": ";
  write_point(out, d.vertex());
  out += ",\n  \"loops\": [";
  for (int i = 0; i < d.n(); ++i) {
    out += i ? ",\n" : "\n";
    out += "    {\"legs\": [";
    const auto& legs = d.loop(i).legs;
    for (std::size_t k = 0; k < legs.size(); ++k) {
      out += k ? ",\n      [" : "\n      [";
      for (std::size_t j = 0; j < legs[k].points.size(); ++j) {
        if (j) out += ", ";
        write_point(out, legs[k].points[j]);
      }
      out += ']';
    }
    out += "\n    ]}";
  }
  out += "\n  ]\n}\n";
  return out;
}

BouquetDiagram diagram_from_json(std::string_view text) {
  TreeBuilder builder;
  if (!nlohmann::json::sax_parse(text, &builder)) bad("malformed JSON: " + builder.error());
  const Node& root = builder.root;
  const mpz_class n = integer(member(root, "n", "document"), "\"n\"");
  const RatPoint vertex = point(member(root, "vertex", "document"), "\"vertex\"");
  const auto& loop_nodes = array(member(root, "loops", "document"), "\"loops\"");
  if (n != static_cast<long>(loop_nodes.size())) {
    bad("\"n\" is " + n.get_str() + " but " + std::to_string(loop_nodes.size()) + " loops are listed");
  }
  std::vector<LoopPath> loops;
  for (std::size_t i = 0; i < loop_nodes.size(); ++i) {
    const std::string where = "loop " + std::to_string(i);
    LoopPath path;
    for (const Node& leg_node : array(member(loop_nodes[i], "legs", where), where + " legs")) {
      Leg leg;
      for (const Node& p : array(leg_node, where + " leg")) leg.points.push_back(point(p, where + " point"));
      path.legs.push_back(std::move(leg));
    }
    loops.push_back(std::move(path));
  }
  return BouquetDiagram(vertex, std::move(loops));
}

std::string load_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error(ErrorCode::Internal, "cannot write " + path);
}

BouquetDiagram load_diagram(const std::string& path) { return diagram_from_json(load_text(path)); }

}  // namespace rp2
