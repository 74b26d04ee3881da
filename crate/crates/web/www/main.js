import init, { expand, series, nilpotence } from "./pkg/dlcalc_web.js";

const $ = (id) => document.getElementById(id);
const num = (id) => Number($(id).value);

function show(id, f) {
  const out = $(id);
  try {
    out.textContent = f();
    out.className = "";
  } catch (e) {
    out.textContent = String(e);
    out.className = "err";
  }
}

function seriesTable(json) {
  const s = JSON.parse(json);
  const rows = s.coeffs.map(([w, d, c]) => `w=${w}  d=${d}  ${c}`);
  return `W=${s.W} E=${s.E} t=${s.t}\n` + (rows.join("\n") || "(empty)");
}

await init();

$("ex-go").onclick = () =>
  show("ex-out", () => {
    const r = JSON.parse(expand(num("ex-p"), $("ex-expr").value, $("ex-seq").value, num("ex-w")));
    let s = r.text;
    if (r.truncated) s += "\n(truncated by weight bound)";
    if (!r.adem_free) s += "\n(contains non-allowable sequences)";
    return s;
  });

$("se-go").onclick = () =>
  show("se-out", () => seriesTable(series(num("se-p"), num("se-k"), num("se-t"), num("se-w"), num("se-e"))));

$("ni-go").onclick = () =>
  show("ni-out", () => {
    const r = JSON.parse(nilpotence(num("ni-p"), $("ni-class").value, num("ni-w"), num("ni-e"), num("ni-m")));
    return JSON.stringify(r, null, 2);
  });
