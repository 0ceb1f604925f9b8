function loop(k) {
  let acc = '';
  for (let i = 0; i < k; i += 1) {
    acc = acc + 'ab';
  }
  return acc;
}
console.log(loop(0), loop(3));
console.log('%', '100%', '%d');
