#include "facekit/errors.hpp"
#include "facekit/seqmodels.hpp"
#include "internal.hpp"

namespace facekit {

namespace {

using A = Answer;
using F = FaceClass::Kind;
using K = ModelSet::Kind;

SeqPoint P(const std::string& text) { return parse_seqpoint(text); }

CorpusCase in_case(std::string label, ModelSet m, SeqPoint p, std::optional<A> icr, std::optional<A> fri,
                   std::optional<A> qri, std::optional<F> face = std::nullopt)
{
  CorpusCase c;
  c.label = std::move(label);
  c.model = std::move(m);
  c.point = std::move(p);
  c.member = A::In;
  c.icr = icr;
  c.fri = fri;
  c.qri = qri;
  c.face = face;
  return c;
}

CorpusCase out_case(std::string label, ModelSet m, SeqPoint p)
{
  CorpusCase c;
  c.label = std::move(label);
  c.model = std::move(m);
  c.point = std::move(p);
  c.member = A::Out;
  return c;
}

}  // namespace

std::vector<CorpusCase> example_corpus()
{
  std::vector<CorpusCase> out;
  auto add = [&](CorpusCase c) { out.push_back(std::move(c)); };
  const std::optional<A> In = A::In, Out = A::Out, Inc = A::Inconclusive;

  // positive part of the l2 unit ball
  const ModelSet B2 = ModelSet::pos_ball2();
  add(in_case("geometric 1/2,1/2", B2, P("head tail geometric 1/2,1/2"), Out, In, In, F::DominatedDecayClass));
  add(in_case("geometric 1,1/3", B2, P("head tail geometric 1,1/3"), Out, In, In, F::DominatedDecayClass));
  add(in_case("geometric 1/3,2/3", B2, P("head tail geometric 1/3,2/3"), Out, In, In, F::DominatedDecayClass));
  add(in_case("two geometric tails", B2, P("head tail geometric 1/4,1/2 tail geometric 1/4,1/3"), Out, In, In,
              F::DominatedDecayClass));
  add(in_case("head then geometric", B2, P("head 1=1/2 tail geometric 1/4,1/2@2"), Out, In, In,
              F::DominatedDecayClass));
  add(in_case("harmonic 1/2", B2, P("head tail harmonic 1/2"), Out, In, In, F::DominatedDecayClass));
  add(in_case("harmonic plus geometric", B2, P("head tail harmonic 1/4 tail geometric 1/4,1/2"), Out, In, In,
              F::DominatedDecayClass));
  add(in_case("finite support e1/2", B2, P("head 1=1/2"), Out, Out, Inc, F::DominatedDecayClass));
  add(in_case("finite support two entries", B2, P("head 1=1/2,2=1/3"), Out, Out, Inc, F::DominatedDecayClass));
  add(in_case("zero first entry", B2, P("head 1=0 tail geometric 1/2,1/2@2"), Out, Out, Inc,
              F::DominatedDecayClass));
  add(in_case("origin", B2, SeqPoint(), Out, Out, Inc, F::DominatedDecayClass));
  add(in_case("unit e1", B2, P("head 1=1"), Out, Out, Inc, F::Singleton));
  add(in_case("unit 3/5,4/5", B2, P("head 1=3/5,2=4/5"), Out, Out, Inc, F::Singleton));
  add(in_case("unit geometric 4/3,3/5", B2, P("head tail geometric 4/3,3/5"), Out, Out, Inc, F::Singleton));
  add(out_case("negative entry", B2, P("head 1=-1/2")));
  add(out_case("norm above one", B2, P("head 1=1,2=1")));

  // l1 unit ball inside l2
  const ModelSet B1 = ModelSet::l1_ball();
  add(in_case("norm 1/2 geometric", B1, P("head tail geometric 1/2,1/2"), In, In, In, F::FullSet));
  add(in_case("norm 2/3 finite", B1, P("head 1=1/3,2=-1/3"), In, In, In, F::FullSet));
  add(in_case("unit e1", B1, P("head 1=1"), Out, Out, Out, F::SignSlice));
  add(in_case("unit finite mixed signs", B1, P("head 1=1/2,2=-1/2"), Out, Out, Out, F::SignSlice));
  add(in_case("unit geometric", B1, P("head tail geometric 1,1/2"), Out, Out, In, F::SignSlice));
  add(in_case("unit negative geometric", B1, P("head tail geometric -1,1/2"), Out, Out, In, F::SignSlice));
  add(in_case("unit two tails", B1, P("head tail geometric 1/2,1/2 tail geometric 1,1/3"), Out, Out, In,
              F::SignSlice));
  add(out_case("harmonic", B1, P("head tail harmonic 1/10")));
  add(out_case("norm 2", B1, P("head 1=2")));

  // co(l1 u {u})
  const SeqPoint u = SeqPoint::harmonic(1);
  const ModelSet CL = ModelSet::conv_l1_point(u);
  add(in_case("u", CL, u, Out, Out, In, F::Singleton));
  add(in_case("point of L", CL, P("head tail geometric 1,1/2"), Out, In, In, F::SubspaceL));
  add(in_case("origin", CL, SeqPoint(), Out, In, In, F::SubspaceL));
  add(in_case("alpha 1/2", CL, P("head tail harmonic 1/2 tail geometric 1/2,1/2"), In, In, In, F::FullSet));
  add(out_case("alpha 1 off u", CL, P("head 1=2 tail harmonic 1@2")));
  add(out_case("alpha 2", CL, P("head tail harmonic 2")));
  add(out_case("alpha -1/2", CL, P("head tail harmonic -1/2")));

  // [0,1] xbar, l1+ and their sum
  const ModelSet ZC = ModelSet::zal_segment();
  add(in_case("origin", ZC, SeqPoint(), Out, Out, Out, F::Singleton));
  add(in_case("xbar", ZC, u, Out, Out, Out, F::Singleton));
  add(in_case("xbar/2", ZC, Rat(1, 2) * u, In, In, In, F::FullSet));
  add(out_case("off the line", ZC, P("head tail geometric 1,1/2")));
  add(out_case("2 xbar", ZC, Rat(2) * u));
  const ModelSet ZP = ModelSet::zal_l1_plus();
  add(in_case("positive geometric", ZP, P("head tail geometric 1,1/2"), Out, In, In, F::DominatedDecayClass));
  add(in_case("e1", ZP, P("head 1=1"), Out, Out, Out, F::DominatedDecayClass));
  add(out_case("harmonic", ZP, u));
  add(out_case("negative entry", ZP, P("head 1=-1")));
  const ModelSet ZS = ModelSet::zal_sum();
  add(in_case("positive geometric", ZS, P("head tail geometric 1,1/2"), Out, In, In));
  add(in_case("xbar/2 plus positive geometric", ZS, P("head tail harmonic 1/2 tail geometric 1,1/2"), Out, In, In));
  add(in_case("xbar plus positive geometric", ZS, P("head tail harmonic 1 tail geometric 1,1/2"), Out, Out, Inc));
  add(in_case("e1", ZS, P("head 1=1"), Out, Out, Out));
  add(out_case("2 xbar", ZS, Rat(2) * u));

  // intersection gadgets, v = (1/i)
  const SeqPoint v = u;
  const ModelSet GA = ModelSet::gadget(K::GadgetA), GB = ModelSet::gadget(K::GadgetB),
                 GC = ModelSet::gadget(K::GadgetC), GD = ModelSet::gadget(K::GadgetD),
                 GCD = ModelSet::gadget(K::GadgetCD);
  add(in_case("v/2", GA, Rat(1, 2) * v, In, In, In, F::FullSet));
  add(in_case("v + head{1:-3}", GA, P("head 1=-2 tail harmonic 1@2"), In, In, In, F::FullSet));
  add(out_case("l1 point", GA, P("head tail geometric 1,1/2")));
  add(out_case("-v", GA, Rat(-1) * v));
  add(in_case("origin", GB, SeqPoint(), In, In, In));
  add(in_case("e1 times -1", GB, P("head 1=-1"), Out, Out, Out));
  add(in_case("negative geometric", GB, P("head tail geometric -1/2,1/2"), In, In, In));
  add(out_case("harmonic", GB, Rat(1, 2) * v));
  add(out_case("entry -2", GB, P("head 1=-2")));
  add(in_case("v/2", GC, Rat(1, 2) * v, In, In, In));
  add(in_case("origin", GC, SeqPoint(), In, In, In));
  add(in_case("-v", GC, Rat(-1) * v, In, In, In));
  add(in_case("e1 times -1", GC, P("head 1=-1"), Out, Inc, Inc));
  add(out_case("v", GC, v));
  add(out_case("entry -2", GC, P("head 1=-2")));
  add(in_case("v/2", GD, Rat(1, 2) * v, In, In, In));
  add(in_case("origin", GD, SeqPoint(), Out, Out, In));
  add(in_case("e1 times -1", GD, P("head 1=-1"), Out, Out, In));
  add(in_case("v + head{1:-3}", GD, P("head 1=-2 tail harmonic 1@2"), In, In, In));
  add(out_case("entry -2", GD, P("head 1=-2")));
  add(out_case("-v", GD, Rat(-1) * v));
  add(in_case("origin", GCD, SeqPoint(), Out, In, In));
  add(in_case("e1 times -1", GCD, P("head 1=-1"), Out, Out, Out));
  add(in_case("v/2", GCD, Rat(1, 2) * v, In, In, In));
  add(in_case("v/2 with u_1 at the floor", GCD, Rat(1, 2) * v + SeqPoint::unit(1, Rat(-1, 2)), Out, Inc, Inc));
  add(out_case("-v", GCD, Rat(-1) * v));
  add(out_case("v", GCD, v));
  return out;
}

namespace {

bool matches(const std::optional<A>& want, const Verdict& got) { return !want || *want == got.answer; }

std::string verdict_line(const char* what, const Verdict& v) { return std::string(what) + "=" + to_string(v.answer); }

}  // namespace

std::vector<Claim> corpus_claims(ModelSet::Kind kind)
{
  std::vector<Claim> out;
  std::size_t sandwich_cases = 0;
  bool sandwich_ok = true;
  for (const CorpusCase& cc : example_corpus()) {
    if (cc.model.kind != kind)
      continue;
    Claim cl;
    cl.name = cc.model.name() + ": " + cc.label;
    cl.notes.push_back("point " + format_seqpoint(cc.point));
    Verdict mv = member(cc.model, cc.point);
    bool ok = mv.answer == cc.member && revalidate(mv.cert);
    cl.notes.push_back(verdict_line("member", mv));
    cl.cert.append(mv.cert);
    if (ok && cc.member == A::In) {
      Verdict iv = icr_member(cc.model, cc.point);
      Verdict fv = fri_member(cc.model, cc.point);
      Verdict qv = qri_member(cc.model, cc.point);
      cl.notes.push_back(verdict_line("icr", iv));
      cl.notes.push_back(verdict_line("fri", fv));
      cl.notes.push_back(verdict_line("qri", qv));
      ok = matches(cc.icr, iv) && matches(cc.fri, fv) && matches(cc.qri, qv);
      for (const Verdict* v : {&iv, &fv, &qv}) {
        ok = ok && revalidate(v->cert);
        cl.cert.append(v->cert);
      }
      auto decisive_in = [](const Verdict& v) { return v.answer == A::In; };
      auto decisive_out = [](const Verdict& v) { return v.answer == A::Out; };
      ++sandwich_cases;
      if ((decisive_in(iv) && decisive_out(fv)) || (decisive_in(fv) && decisive_out(qv)) ||
          (decisive_in(iv) && decisive_out(qv)))
        sandwich_ok = false;
      if (cc.face) {
        try {
          FaceClass f = minimal_face_class(cc.model, cc.point);
          cl.notes.push_back("face=" + to_string(f.kind));
          ok = ok && f.kind == *cc.face && f.test_in_face(cc.point);
        } catch (const UnsupportedError& e) {
          cl.notes.push_back(std::string("face unsupported: ") + e.what());
          ok = false;
        }
      }
    }
    cl.pass = ok;
    out.push_back(std::move(cl));
  }
  Claim s;
  s.name = "sandwich icr => fri => qri over the corpus";
  s.pass = sandwich_ok;
  s.cert.add(literal("corpus points checked", Rat(static_cast<unsigned long>(sandwich_cases)), Rel::Ge, 1));
  s.cert.note("no decisive In verdict is followed by a decisive Out further along the chain");
  out.push_back(std::move(s));
  return out;
}

}  // namespace facekit
