function apply(f, v) {
  return f(v);
}
function double(v) {
  return v * 2;
}
console.log(apply(double, 21));
let g = double;
console.log(g(4), g === double);
console.log(double);
