import init, { inspect, verify, cauchy } from "./pkg/zrank_web.js";

function inspectText(v) {
  const strips = v.greedy.map((s) => s.cells.map(([r, c]) => `(${r},${c})`).join("")).join("  ");
  return [
    `rank ${v.rank}   zrank ${v.zrank}   z ${v.z}   cells ${v.cells}`,
    `code   ${v.code.top}`,
    `       ${v.code.bottom}`,
    `snakes ${v.snakes}`,
    `I0     ${v.noncrossing}`,
    `greedy ${strips}`,
    `s(1^t) = ${v.polynomial_text}`,
    `y      ${v.y}`,
  ].join("\n");
}

function cauchyText(v) {
  const width = Math.max(...v.matrix.flat().map((x) => x.length));
  const rows = v.matrix.map((r) => r.map((x) => x.padStart(width)).join("  "));
  return [
    `class ${v.class}   order ${v.order}   reducible ${v.reducible}`,
    ...rows,
    `det ${v.det}`,
    `shape ${v.shape}   rank ${v.shape_rank}   y ${v.shape_y}`,
    v.failures.length ? `failed: ${v.failures.join("; ")}` : "all checks pass",
  ].join("\n");
}

function wire(name, op, render) {
  const out = document.getElementById(`${name}-out`);
  const input = document.getElementById(`${name}-input`);
  document.getElementById(`${name}-form`).addEventListener("submit", (event) => {
    event.preventDefault();
    out.classList.remove("error");
    try {
      out.textContent = render(JSON.parse(op(input.value)));
    } catch (e) {
      out.classList.add("error");
      out.textContent = e.message ?? String(e);
    }
  });
}

await init();
wire("inspect", inspect, inspectText);
wire("verify", verify, (v) => JSON.stringify(v, null, 2));
wire("cauchy", cauchy, cauchyText);
