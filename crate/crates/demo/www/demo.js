import init, { kernelize, analyze, extension } from "./pkg/svcfc_demo.js";

const PALETTE = [
  "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4",
  "#46f0f0", "#f032e6", "#bcf60c", "#fabebe", "#008080", "#e6beff",
];

function colorOf(c) {
  return c ? PALETTE[(c - 1) % PALETTE.length] : "#ffffff";
}

// Cover vertices on an inner ring, the rest on an outer ring.
function layout(n, cover, w, h) {
  const inCover = new Set(cover);
  const inner = [...Array(n).keys()].filter((v) => inCover.has(v));
  const outer = [...Array(n).keys()].filter((v) => !inCover.has(v));
  const pos = new Array(n);
  const cx = w / 2, cy = h / 2, r = Math.min(w, h) / 2 - 24;
  const place = (list, radius, phase) =>
    list.forEach((v, i) => {
      const a = phase + (2 * Math.PI * i) / Math.max(list.length, 1);
      pos[v] = [cx + radius * Math.cos(a), cy + radius * Math.sin(a)];
    });
  if (outer.length === 0) place(inner, r, -Math.PI / 2);
  else {
    place(inner, inner.length === 1 ? 0 : r * 0.38, -Math.PI / 2);
    place(outer, r, -Math.PI / 2);
  }
  return pos;
}

function draw(canvas, graph, { cover = [], colors = null, faded = [], title = "" } = {}) {
  const ctx = canvas.getContext("2d");
  const { width: w, height: h } = canvas;
  ctx.clearRect(0, 0, w, h);
  const pos = layout(graph.n, cover, w, h);
  const fade = new Set(faded);
  const inCover = new Set(cover);
  for (const [u, v] of graph.edges) {
    ctx.strokeStyle = fade.has(u) || fade.has(v) ? "#e2e2e2" : "#888";
    ctx.beginPath();
    ctx.moveTo(...pos[u]);
    ctx.lineTo(...pos[v]);
    ctx.stroke();
  }
  const size = graph.n > 30 ? 8 : 13;
  for (let v = 0; v < graph.n; v++) {
    const [x, y] = pos[v];
    ctx.globalAlpha = fade.has(v) ? 0.25 : 1;
    ctx.fillStyle = colors ? colorOf(colors[v]) : "#fff";
    ctx.strokeStyle = "#222";
    ctx.lineWidth = inCover.has(v) ? 2.5 : 1;
    ctx.beginPath();
    if (inCover.has(v)) ctx.rect(x - size, y - size, 2 * size, 2 * size);
    else ctx.arc(x, y, size, 0, 2 * Math.PI);
    ctx.fill();
    ctx.stroke();
    ctx.fillStyle = "#000";
    ctx.font = `${size}px sans-serif`;
    ctx.textAlign = "center";
    ctx.textBaseline = "middle";
    ctx.fillText(colors ? String(colors[v]) : String(v), x, y);
  }
  ctx.globalAlpha = 1;
  ctx.lineWidth = 1;
  ctx.fillStyle = "#333";
  ctx.font = "13px sans-serif";
  ctx.textAlign = "left";
  ctx.fillText(title, 6, 14);
}

function show(id, text, isError) {
  const el = document.getElementById(id);
  el.textContent = text;
  el.className = isError ? "out error" : "out";
}

function parse(out, id) {
  const doc = JSON.parse(out);
  if (doc.error) {
    show(id, `${doc.error.kind}: ${doc.error.message}`, true);
    return null;
  }
  return doc;
}

function runKernel() {
  const k = Number(document.getElementById("spec-k").value);
  const doc = parse(kernelize(document.getElementById("spec").value, k), "kernel-out");
  if (!doc) return;
  const kr = doc.kernel;
  show(
    "kernel-out",
    `n: ${kr.n_before} -> ${kr.n_after} (bound ${kr.bound})\n` +
      (kr.shortcut ? "a twin-clique is larger than k: fixed no-instance\n" : "") +
      `deleted cliques: ${kr.deletions.map((d) => `[${d.vertices}]`).join(" ") || "none"}`,
    false,
  );
  draw(document.getElementById("kernel-before"), doc.input, {
    cover: doc.cover,
    faded: doc.deleted,
    title: "input (deleted cliques faded)",
  });
  const after = { n: kr.n_after, edges: kr.edges };
  draw(document.getElementById("kernel-after"), after, { cover: kr.x_out, title: `kernel, k = ${kr.k_out}` });
}

function runAnalyze() {
  const doc = parse(analyze(document.getElementById("instance").value), "analyze-out");
  if (!doc) return;
  const which = document.querySelector("input[name=which]:checked").value;
  let colors = doc.upper.coloring;
  let title = `chi + |X| construction: ${doc.upper.colors} colors`;
  if (which === "proper") {
    colors = doc.proper;
    title = `minimum proper coloring: ${doc.chi} colors`;
  } else if (which === "exact") {
    if (doc.exact) {
      colors = doc.exact.witness;
      title = `optimal strong coloring: ${doc.exact.svcfc} colors`;
    } else {
      title = "graph too large for the exact search; showing the construction";
    }
  }
  show(
    "analyze-out",
    `twin cover X = [${doc.cover}]\nchi = ${doc.chi}\n` +
      `construction: ${doc.upper.colors} colors, strong: ${doc.upper.strong}\n` +
      `optimum: ${doc.exact ? doc.exact.svcfc : "not computed"}`,
    false,
  );
  draw(document.getElementById("analyze-canvas"), doc.graph, { cover: doc.cover, colors, title });
}

function runExtension() {
  const doc = parse(
    extension(document.getElementById("ext-instance").value, document.getElementById("phi").value),
    "ext-out",
  );
  if (!doc) return;
  show("ext-out", `K = ${doc.k_phi}, attained at S = [${doc.S}]`, false);
  draw(document.getElementById("ext-canvas"), doc.graph, {
    cover: doc.cover,
    colors: doc.coloring,
    title: `fewest colors extending the cover's coloring: ${doc.k_phi}`,
  });
}

await init();
document.getElementById("run-kernel").addEventListener("click", runKernel);
document.getElementById("run-analyze").addEventListener("click", runAnalyze);
document.getElementById("run-ext").addEventListener("click", runExtension);
document.querySelectorAll("input[name=which]").forEach((el) => el.addEventListener("change", runAnalyze));
runKernel();
runAnalyze();
runExtension();
