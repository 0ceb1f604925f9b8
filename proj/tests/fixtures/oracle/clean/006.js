function fib(n) {
  if (n < 2) {
    return n;
  }
  return fib(n - 1) + fib(n - 2);
}
let i = 0;
while (i < 15) {
  console.log('fib', i, fib(i));
  i += 1;
}
