#pragma once

// Proof traces: a line-oriented text format with one lemma application per
// line and element data in cycle notation. The verifier consumes the same
// format and re-checks every cited relation from raw group data.

#include <fstream>
#include <sstream>

#include "nichols/criteria.hpp"
#include "nichols/io.hpp"

namespace nichols {

namespace trace_detail {

inline std::string perm_str(const Perm& p) { return p.cycles(); }

inline void emit_certificate(std::ostream& os, const Certificate& cert) {
  struct V {
    std::ostream& os;
    void operator()(const CertIdentity&) { os << "certificate identity-class\n"; }
    void operator()(const CertRealScalar& c) {
      os << "certificate real-scalar witness " << c.witness.cycles() << "\n";
    }
    void operator()(const CertPowerScalar& c) {
      os << "certificate power-scalar k " << c.k << " witness " << c.witness.cycles() << "\n";
    }
    void operator()(const CertDiagonalSubspace& c) {
      os << "certificate diagonal kind " << (c.cartan ? "cartan" : "hecke") << "\n";
      for (size_t i = 0; i < c.witness.elements.size(); ++i)
        os << "member " << c.witness.elements[i].cycles() << " rep "
           << c.witness.reps[i].cycles() << "\n";
      for (const auto& row : c.qmat.q) {
        os << "qrow";
        for (size_t i = 0; i < row.size(); ++i) os << (i ? " | " : " ") << row[i].to_string();
        os << "\n";
      }
      if (c.cartan) {
        for (const auto& row : c.cartan->a) {
          os << "cartanrow";
          for (int v : row) os << " " << v;
          os << "\n";
        }
      }
      if (c.obstruction) {
        os << "obstruction "
           << (c.obstruction->kind == HeckeObstruction::Valency ? "valency" : "cycle");
        for (size_t v : c.obstruction->vertices) os << " " << v;
        os << "\n";
      }
    }
    void operator()(const CertJointEigen& c) {
      os << "certificate joint-eigen\n";
      for (size_t i = 0; i < c.witness.elements.size(); ++i)
        os << "member " << c.witness.elements[i].cycles() << " rep "
           << c.witness.reps[i].cycles() << "\n";
      for (const Perm& f : c.family) os << "family " << f.cycles() << "\n";
    }
    void operator()(const CertDp& c) {
      os << "certificate dp p " << c.p << " k " << c.power_k << "\n";
      for (unsigned i = 0; i < c.p; ++i)
        os << "sigma " << c.family.sigma[i].cycles() << " wit "
           << c.family.witnesses[i].cycles() << "\n";
    }
    void operator()(const CertO2Special& c) {
      os << "certificate o2-special d " << c.d << " e " << c.e << "\n";
      for (int i = 0; i < 6; ++i)
        os << "sigma " << c.family.sigma[i].cycles() << " wit "
           << c.family.sigma_wit[i].cycles() << "\n";
      for (int i = 0; i < 6; ++i)
        os << "tau " << c.family.tau[i].cycles() << " wit " << c.family.tau_wit[i].cycles()
           << "\n";
    }
    void operator()(const CertO2General& c) {
      os << "certificate o2-general g " << c.conjugator.cycles() << "\n";
      for (int i = 0; i < 6; ++i)
        os << "sigma " << c.family.sigma[i].cycles() << " wit "
           << c.family.sigma_wit[i].cycles() << "\n";
      for (int i = 0; i < 6; ++i)
        os << "tau " << c.family.tau[i].cycles() << " wit " << c.family.tau_wit[i].cycles()
           << "\n";
    }
  };
  std::visit(V{os}, cert);
}

}  // namespace trace_detail

struct TracePair {
  unsigned class_label = 0;
  Perm rep;
  size_t irrep = 0;
  uint64_t degree = 0;
  std::optional<Cyclotomic> qss;
  Outcome outcome = Outcome::Unknown;
  Stage stage = Stage::Abelian;
  bool exhausted = true;
  std::optional<Certificate> certificate;
  std::vector<std::string> notes;
};

struct TraceFile {
  std::string group_name;
  GroupDef def;
  std::vector<TracePair> pairs;
};

inline void emit_trace(std::ostream& os, const std::string& group_name, const GroupDef& def,
                       const std::vector<ConjClass>& classes,
                       const std::vector<Verdict>& verdicts) {
  os << "trace 1\n";
  os << "group " << group_name << " degree " << def.degree << " digest " << digest_hex(def)
     << "\n";
  for (const Perm& g : def.generators) os << "gen " << g.cycles() << "\n";
  for (const Verdict& v : verdicts) {
    const ConjClass* cls = nullptr;
    for (const auto& c : classes)
      if (c.label == v.class_label) cls = &c;
    os << "pair class " << v.class_label << " rep " << cls->rep.cycles() << " irrep "
       << v.irrep << " degree " << v.degree << " qss "
       << (v.qss ? v.qss->to_string() : std::string("-")) << "\n";
    for (const std::string& line : v.trace) os << "note " << line << "\n";
    if (v.certificate) trace_detail::emit_certificate(os, *v.certificate);
    os << "verdict " << outcome_name(v.outcome) << " stage " << stage_name(v.stage)
       << " exhausted " << (v.search_exhausted ? 1 : 0) << "\n";
    os << "endpair\n";
  }
}

inline TraceFile parse_trace(std::istream& in) {
  TraceFile tf;
  std::string line;
  if (!std::getline(in, line) || line.rfind("trace", 0) != 0)
    throw std::runtime_error("trace: missing header");
  std::optional<TracePair> cur;
  auto degree = [&] { return tf.def.degree; };

  auto parse_perm_after = [&](const std::string& text, const std::string& key) {
    size_t pos = text.find(key);
    if (pos == std::string::npos) throw std::runtime_error("trace: missing " + key);
    std::string rest = text.substr(pos + key.size());
    size_t end = rest.find_first_of(" \t");
    return Perm::parse_cycles(end == std::string::npos ? rest : rest.substr(0, end), degree());
  };

  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "group") {
      std::string kw;
      ls >> tf.group_name >> kw >> tf.def.degree;
    } else if (tag == "gen") {
      std::string cyc;
      ls >> cyc;
      tf.def.generators.push_back(Perm::parse_cycles(cyc, degree()));
    } else if (tag == "pair") {
      cur.emplace();
      std::string kw, repstr, qstr;
      ls >> kw >> cur->class_label >> kw >> repstr >> kw >> cur->irrep >> kw >> cur->degree >>
          kw;
      std::getline(ls, qstr);  // q_ss serialization may contain spaces
      size_t a = qstr.find_first_not_of(' ');
      if (a != std::string::npos) qstr = qstr.substr(a);
      cur->rep = Perm::parse_cycles(repstr, degree());
      if (qstr != "-") cur->qss = Cyclotomic::from_string(qstr);
    } else if (tag == "note") {
      std::string rest;
      std::getline(ls, rest);
      cur->notes.push_back(rest);
    } else if (tag == "certificate") {
      std::string kind;
      ls >> kind;
      if (kind == "identity-class") {
        cur->certificate = Certificate{CertIdentity{}};
      } else if (kind == "real-scalar") {
        cur->certificate = Certificate{CertRealScalar{parse_perm_after(line, "witness ")}};
      } else if (kind == "power-scalar") {
        CertPowerScalar c;
        std::string kw;
        ls >> kw >> c.k;
        c.witness = parse_perm_after(line, "witness ");
        cur->certificate = Certificate{c};
      } else if (kind == "diagonal") {
        CertDiagonalSubspace c;
        std::string kw, sub;
        ls >> kw >> sub;
        if (sub == "cartan") c.cartan.emplace();
        cur->certificate = Certificate{c};
      } else if (kind == "joint-eigen") {
        cur->certificate = Certificate{CertJointEigen{}};
      } else if (kind == "dp") {
        CertDp c;
        std::string kw;
        ls >> kw >> c.p >> kw >> c.power_k;
        c.family.p = c.p;
        cur->certificate = Certificate{c};
      } else if (kind == "o2-special") {
        CertO2Special c;
        std::string kw;
        ls >> kw >> c.d >> kw >> c.e;
        cur->certificate = Certificate{c};
      } else if (kind == "o2-general") {
        CertO2General c;
        c.conjugator = parse_perm_after(line, "g ");
        cur->certificate = Certificate{c};
      } else {
        throw std::runtime_error("trace: unknown certificate kind " + kind);
      }
    } else if (tag == "member") {
      Perm m = parse_perm_after(line, "member ");
      Perm r = parse_perm_after(line, "rep ");
      if (auto* d = std::get_if<CertDiagonalSubspace>(&*cur->certificate)) {
        d->witness.elements.push_back(m);
        d->witness.reps.push_back(r);
      } else if (auto* j = std::get_if<CertJointEigen>(&*cur->certificate)) {
        j->witness.elements.push_back(m);
        j->witness.reps.push_back(r);
      } else {
        throw std::runtime_error("trace: member outside diagonal/joint certificate");
      }
    } else if (tag == "family") {
      std::get<CertJointEigen>(*cur->certificate)
          .family.push_back(parse_perm_after(line, "family "));
    } else if (tag == "qrow") {
      auto& d = std::get<CertDiagonalSubspace>(*cur->certificate);
      std::string rest = line.substr(5);
      std::vector<Cyclotomic> row;
      size_t start = 0;
      while (start <= rest.size()) {
        size_t bar = rest.find('|', start);
        std::string cell =
            bar == std::string::npos ? rest.substr(start) : rest.substr(start, bar - start);
        row.push_back(Cyclotomic::from_string(cell));
        if (bar == std::string::npos) break;
        start = bar + 1;
      }
      d.qmat.q.push_back(std::move(row));
    } else if (tag == "cartanrow") {
      auto& d = std::get<CertDiagonalSubspace>(*cur->certificate);
      if (!d.cartan) d.cartan.emplace();
      std::vector<int> row;
      int v;
      while (ls >> v) row.push_back(v);
      d.cartan->a.push_back(std::move(row));
    } else if (tag == "obstruction") {
      auto& d = std::get<CertDiagonalSubspace>(*cur->certificate);
      HeckeObstruction ob;
      std::string kind;
      ls >> kind;
      ob.kind = kind == "valency" ? HeckeObstruction::Valency : HeckeObstruction::Cycle;
      size_t v;
      while (ls >> v) ob.vertices.push_back(v);
      d.obstruction = ob;
      d.cartan.reset();
    } else if (tag == "sigma" || tag == "tau") {
      Perm m = parse_perm_after(line, tag + " ");
      Perm w = parse_perm_after(line, "wit ");
      if (auto* c = std::get_if<CertDp>(&*cur->certificate)) {
        c->family.sigma.push_back(m);
        c->family.witnesses.push_back(w);
      } else {
        O2Family* fam = nullptr;
        if (auto* c2 = std::get_if<CertO2Special>(&*cur->certificate)) fam = &c2->family;
        if (auto* c3 = std::get_if<CertO2General>(&*cur->certificate)) fam = &c3->family;
        if (!fam) throw std::runtime_error("trace: sigma/tau outside a family certificate");
        auto& arr = tag == "sigma" ? fam->sigma : fam->tau;
        auto& wits = tag == "sigma" ? fam->sigma_wit : fam->tau_wit;
        size_t i = 0;
        while (i < 6 && arr[i].degree() != 0) ++i;
        if (i == 6) throw std::runtime_error("trace: too many family members");
        arr[i] = m;
        wits[i] = w;
      }
    } else if (tag == "verdict") {
      std::string out, kw, stg;
      int ex;
      ls >> out >> kw >> stg >> kw >> ex;
      cur->outcome = out == "infinite"   ? Outcome::Infinite
                     : out == "negative" ? Outcome::NegativeBraiding
                                         : Outcome::Unknown;
      cur->stage = stg == "abelian" ? Stage::Abelian : Stage::NonAbelian;
      cur->exhausted = ex != 0;
    } else if (tag == "endpair") {
      tf.pairs.push_back(std::move(*cur));
      cur.reset();
    } else {
      throw std::runtime_error("trace: unknown tag " + tag);
    }
  }
  return tf;
}

}  // namespace nichols
