// Built with: wasm-pack build crates/web --target web --out-dir www/pkg
import init, { graphJson, reportJson, supportJson, triplesJson } from "./pkg/pgv_web.js";

const $ = (id) => document.getElementById(id);

function guarded(fn) {
  return () => {
    $("error").textContent = "";
    try {
      fn();
    } catch (e) {
      $("error").textContent = String(e.message ?? e);
    }
  };
}

function drawGraph(graph) {
  const canvas = $("canvas");
  const ctx = canvas.getContext("2d");
  const n = graph.vertices;
  const r = canvas.width / 2 - 12;
  const pos = Array.from({ length: n }, (_, i) => {
    const a = (2 * Math.PI * i) / n - Math.PI / 2;
    return [canvas.width / 2 + r * Math.cos(a), canvas.height / 2 + r * Math.sin(a)];
  });
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  ctx.globalAlpha = Math.min(1, 40 / Math.sqrt(graph.edges.length));
  ctx.strokeStyle = "#345";
  ctx.beginPath();
  for (const [u, v] of graph.edges) {
    ctx.moveTo(...pos[u]);
    ctx.lineTo(...pos[v]);
  }
  ctx.stroke();
  ctx.globalAlpha = 1;
  ctx.fillStyle = "#c33";
  for (const [x, y] of pos) ctx.fillRect(x - 1.5, y - 1.5, 3, 3);
}

function showReport(report) {
  const rows = report.claims.map(
    (c) => `<tr><th style="text-align:left">${c.name}</th>` +
      `<td class="${c.status}">${c.status}</td><td>${JSON.stringify(c.computed)}</td></tr>`,
  );
  $("claims").innerHTML = rows.join("");
}

function buildFamily() {
  const family = $("family").value;
  const p = Number($("family-p").value);
  showReport(JSON.parse(reportJson(family, p)));
  const ctx = $("canvas").getContext("2d");
  ctx.clearRect(0, 0, 520, 520);
  try {
    const graph = JSON.parse(graphJson(family, p));
    $("graph-summary").textContent = `${graph.vertices} vertices, valency ${graph.valency}, ${graph.edges.length} edges`;
    drawGraph(graph);
  } catch (e) {
    $("graph-summary").textContent = `not drawn: ${e.message ?? e}`;
  }
}

function showSupport() {
  const data = JSON.parse(supportJson(Number($("support-p").value)));
  const p = data.p;
  const cell = new Map(data.cells.map((c) => [`${c.i},${c.j}`, c]));
  let html = "<table><tr><th></th>";
  for (let j = 0; j < p; j++) html += `<th>${j}</th>`;
  html += "</tr>";
  for (let i = 0; i < p; i++) {
    html += `<tr><th>${i}</th>`;
    for (let j = 0; j < p; j++) {
      const c = cell.get(`${i},${j}`);
      if (!c) { html += "<td></td>"; continue; }
      const cls = c.support !== c.expected ? "bad" : c.support === 5 ? "five" : "";
      html += `<td class="${cls}">${c.support}</td>`;
    }
    html += "</tr>";
  }
  $("support-table").innerHTML = html + "</table>";
  const mismatches = data.cells.filter((c) => c.support !== c.expected).length;
  $("support-summary").textContent =
    `${mismatches} cells differ from the distance prediction; ` +
    `support-5 pairs ${data.single_cycle ? "form" : "do not form"} a single ${p}-cycle`;
}

function showTriples() {
  const data = JSON.parse(triplesJson(Number($("triple-p").value)));
  const rows = data.pairs.map(
    (r) => `<tr><td>${r.l}</td><td>${r.k}</td>` +
      `<td class="${r.conceivable ? "pass" : "fail"}">${r.conceivable ? "admitted" : "ruled out"}</td></tr>`,
  );
  $("triple-table").innerHTML = "<tr><th>l</th><th>k</th><th></th></tr>" + rows.join("");
}

await init();
$("draw").onclick = guarded(buildFamily);
$("support").onclick = guarded(showSupport);
$("triples").onclick = guarded(showTriples);
