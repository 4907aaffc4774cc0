import init, { report, semigroup_strip, core_diagram } from "./pkg/binsg_web.js";

const $ = (id) => document.getElementById(id);

function el(tag, attrs = {}, text = "") {
  const node = document.createElement(tag);
  Object.assign(node, attrs);
  if (text) node.textContent = text;
  return node;
}

function guarded(out, fn) {
  out.replaceChildren();
  try {
    fn(out);
  } catch (e) {
    out.append(el("p", { className: "err" }, e.message ?? String(e)));
  }
}

function showReport(out) {
  const r = JSON.parse(report(Number($("n").value)));
  const lines = [
    `generators        ${r.generators.join(", ")}`,
    `Frobenius         ${r.frobenius}`,
    `genus             ${r.genus}`,
    `type              ${r.type}`,
    `symmetric         ${r.symmetric}`,
    `telescopic        ${r.telescopic}`,
    `Ap(S, ${r.apery_base})`.padEnd(18) + r.apery_set.join(", "),
  ];
  out.append(el("pre", {}, lines.join("\n")));
}

function showStrip(out) {
  const r = JSON.parse(semigroup_strip($("gens").value, Number($("window").value)));
  out.append(el("p", {}, `F = ${r.frobenius}, genus ${r.genus}, pseudo-Frobenius ${r.pseudo_frobenius.join(", ")}`));
  const strip = el("div", { className: "strip" });
  r.members.forEach((m, i) => strip.append(el("span", { className: m ? "in" : "gap" }, String(i))));
  out.append(strip);
}

function showCore(out) {
  const r = JSON.parse(core_diagram($("core-in").value, $("core-gens").checked));
  out.append(el("p", {}, `λ = (${r.partition.join(",")}), F = ${r.frobenius}`));
  const table = el("table", { className: "young" });
  for (const row of r.hooks) {
    const tr = el("tr");
    for (const h of row) tr.append(el("td", {}, String(h)));
    table.append(tr);
  }
  out.append(table);
  out.append(el("p", {}, `hook set {${r.hook_set.join(", ")}}`));
  const pairs = r.admissible_pairs === null
    ? "too large to enumerate"
    : r.admissible_pairs.map(([s, p]) => `(${s}, ${p})`).join(", ") || "none";
  out.append(el("p", {}, `admissible (s, p): ${pairs}`));
}

await init();
for (const [button, out, fn] of [["report-go", "report-out", showReport], ["strip-go", "strip-out", showStrip], ["core-go", "core-out", showCore]]) {
  $(button).addEventListener("click", () => guarded($(out), fn));
  guarded($(out), fn);
}
