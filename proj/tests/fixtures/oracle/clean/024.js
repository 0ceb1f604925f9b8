function f0(p1, p2) {
  for (let i3 = 0; i3 < 3; i3 += 1) {
    let v4 = '' !== 'a' === 'a' !== '\t\u00e9';
    p1 /= p2 % (p2);
    if (!(false)) {
      if (12 !== 72042 / 1e11) {
        let v5 = 2 % p2 % 8.63;
        let v6 = (i3 <= 0) || v4;
        v4 = (v6);
      }
      console.log('a');
    }
  }
  16;
  return 6 / p2 - 10 - p1;
}
function f7(p8, p9) {
  2;
  if ('' === '\t\u00e9' || (true)) {
    p9 %= p8 + p8 / p8;
  }
  console.log('\t\u00e9' + '\t\u00e9' + '8', (p8 < p8) && 13373 === 7.89 || false);
  return 93870 + p8 * p8;
}
f7(f0(4, -4), -1e20);
if ((99672 <= 80995)) {
  let w10 = 1;
  while (w10 > 0) {
    w10 -= 1;
    f7(56673, w10 % 1e7);
    console.log(-(w10 % w10 + 11 - 1.33));
  }
} else {
  console.log(true, 'a');
}
{
  console.log();
}
console.log((('a')));
console.log(38512);
