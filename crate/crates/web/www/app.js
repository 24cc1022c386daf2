import init, { analyzeRing, spectralSuite, spaceAxioms } from "./pkg/zdg_web.js";

const $ = (id) => document.getElementById(id);

function el(tag, text, cls) {
  const e = document.createElement(tag);
  if (text !== undefined) e.textContent = text;
  if (cls) e.className = cls;
  return e;
}

function verdict(ok) {
  return el("span", ok ? "pass" : "FAIL", ok ? "pass" : "fail");
}

function parts(list) {
  const ul = el("ul");
  for (const p of list) {
    const li = el("li");
    li.append(p.applicable ? verdict(p.passed) : el("span", "n/a"), ` part ${p.part}: ${p.claim}`);
    if (p.detail) li.append(el("small", ` (${p.detail})`));
    ul.append(li);
  }
  return ul;
}

function run(out, f) {
  out.replaceChildren();
  try {
    f();
  } catch (e) {
    out.append(el("p", String(e), "fail"));
  }
}

$("ring-go").onclick = () => run($("ring-out"), () => {
  const r = JSON.parse(analyzeRing($("ring").value));
  const out = $("ring-out");
  out.append(
    el("p", `${r.ring}: order ${r.order}, ${r.reduced ? "reduced" : "not reduced"}, ${r.ideals.length} ideals, maximal ${r.maximal.join(", ")}`),
    el("p", `${r.gamma.title}: ${r.gamma.summary}`),
    el("p", `${r.ag.title}: ${r.ag.summary}` + (r.ag_verdict.witness ? `; 3-cycle ${r.ag_verdict.witness.join(", ")}` : "")),
    el("p", `comaximal graph: ${r.comaximal.summary}`),
    el("pre", r.gamma.dot),
  );
});

$("poset-go").onclick = () => run($("poset-out"), () => {
  const r = JSON.parse(spectralSuite($("poset").value));
  const out = $("poset-out");
  const head = el("p");
  head.append(verdict(r.passed), ` ${r.mode}: |Max| = ${r.max_count}, Max ${r.max_irreducible ? "irreducible" : "reducible"}`);
  out.append(head, el("p", `G: ${r.g_summary}`), el("p", `H: ${r.h_summary}`), parts(r.parts));
  if (r.witnesses.length) out.append(el("pre", r.witnesses.join("\n")));
});

$("space-go").onclick = () => run($("space-out"), () => {
  const r = JSON.parse(spaceAxioms($("space").value));
  const a = r.axioms;
  const out = $("space-out");
  out.append(
    el("p", `T0 ${a.t0}, T1 ${a.t1}, T½ ${a.t_half}, pearled ${a.pearled}, longest chain ${a.longest_chain}`),
    el("p", `${r.gamma.title}: ${r.gamma.summary}`),
  );
  if (r.alpha.error) out.append(el("p", `α: ${r.alpha.error}`));
  else out.append(parts(r.alpha.parts));
});

init().then(() => {
  $("status").textContent = "ready";
}, (e) => {
  $("status").textContent = `failed to load: ${e}`;
});
