#include "permspec/spec_io.hpp"

#include <fstream>
#include <istream>
#include <map>

namespace permspec {

using nlohmann::json;

std::vector<Permutation> read_permutation_list(std::istream &in)
{
  std::vector<Permutation> out;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    try {
      out.push_back(parse_permutation(line));
    } catch (const InvalidInput &e) {
      throw InvalidInput("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::vector<Permutation> read_permutation_file(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
    throw InvalidInput("cannot open " + path);
  try {
    return read_permutation_list(in);
  } catch (const InvalidInput &e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

namespace {

json perms_to_json(const std::vector<Permutation> &ps)
{
  json a = json::array();
  for (const auto &p : ps)
    a.push_back(p.values());
  return a;
}

std::vector<Permutation> perms_from_json(const json &a)
{
  std::vector<Permutation> out;
  for (const auto &p : a)
    out.emplace_back(p.get<std::vector<int>>());
  return out;
}

} // namespace

json to_json(const Restriction &r)
{
  return json{{"delta", delta_suffix(r.delta)}, {"avoid", perms_to_json(r.avoid)}, {"contain", perms_to_json(r.contain)}};
}

Restriction restriction_from_json(const json &j)
{
  return canonicalize(Restriction{parse_delta(j.at("delta").get<std::string>()), perms_from_json(j.at("avoid")),
                                  perms_from_json(j.at("contain"))});
}

json to_json(const EquationSystem &sys)
{
  json eqs = json::array();
  for (const auto &eq : sys.equations) {
    json terms = json::array();
    for (const auto &t : eq.terms) {
      json root = t.root == plus_root() ? json("plus") : t.root == minus_root() ? json("minus") : json(t.root.values());
      json children = json::array();
      for (const auto &c : t.children)
        children.push_back(c.key());
      terms.push_back(json{{"root", root}, {"children", children}});
    }
    eqs.push_back(json{{"lhs", to_json(eq.lhs)},
                       {"key", eq.lhs.key()},
                       {"has_one", eq.has_one},
                       {"disjoint", eq.disjoint},
                       {"terms", terms}});
  }
  return json{{"closure_simples", perms_to_json(sys.simples)}, {"equations", eqs}};
}

EquationSystem system_from_json(const json &j)
{
  try {
    EquationSystem sys;
    sys.simples = perms_from_json(j.at("closure_simples"));
    for (const auto &s : sys.simples)
      if (!is_simple(s))
        throw InvalidInput(s.compact() + " in closure_simples is not simple");
    std::map<std::string, Restriction> by_key;
    for (const auto &e : j.at("equations")) {
      Restriction r = restriction_from_json(e.at("lhs"));
      by_key.emplace(r.key(), r);
    }
    for (const auto &e : j.at("equations")) {
      Equation eq;
      eq.lhs = restriction_from_json(e.at("lhs"));
      eq.has_one = e.at("has_one").get<bool>();
      eq.disjoint = e.value("disjoint", false);
      for (const auto &t : e.at("terms")) {
        Term term;
        const auto &root = t.at("root");
        if (root.is_string()) {
          const auto s = root.get<std::string>();
          if (s != "plus" && s != "minus")
            throw InvalidInput("unknown root '" + s + "'");
          term.root = s == "plus" ? plus_root() : minus_root();
        } else {
          term.root = Permutation(root.get<std::vector<int>>());
        }
        for (const auto &c : t.at("children")) {
          auto it = by_key.find(c.get<std::string>());
          if (it == by_key.end())
            throw InvalidInput("child " + c.get<std::string>() + " has no equation");
          term.children.push_back(it->second);
        }
        if (term.children.size() != term.root.size())
          throw InvalidInput("term with root " + term.root.compact() + " has the wrong number of children");
        for (std::size_t k = 0; k < term.children.size(); ++k)
          if (term.children[k].delta != child_delta(term.root, k))
            throw InvalidInput("term " + term.pretty() + " has a child with the wrong delta");
        eq.terms.push_back(std::move(term));
      }
      sys.equations.push_back(std::move(eq));
    }
    return sys;
  } catch (const json::exception &e) {
    throw InvalidInput(std::string("malformed specification JSON: ") + e.what());
  }
}

std::string dump(const EquationSystem &sys) { return to_json(sys).dump(2) + "\n"; }

EquationSystem read_system_file(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
    throw InvalidInput("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception &e) {
    throw InvalidInput(path + ": " + e.what());
  }
  return system_from_json(j);
}

} // namespace permspec
