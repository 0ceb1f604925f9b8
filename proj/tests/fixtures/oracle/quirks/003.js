let x;
console.log(x, x + 1, x + 'a', x > 1, x === x);
if (x) {
  console.log('never');
} else {
  console.log('undefined is falsy');
}
