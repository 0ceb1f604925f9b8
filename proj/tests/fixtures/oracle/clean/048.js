function f0(p1, p2, p3) {
  for (let i4 = 0; i4 < 0; i4 += 1) {
    if (true) {
      if (!true) {
        let v5 = (13) >= 61820 / 1;
        console.log((1e6 + i4));
        let v6 = '\t\u00e9';
      }
      let v7 = -p2 !== 1;
    }
    p3 /= -(0 * i4);
    if (true && false === 2.85 === p2 === p2 <= 84550) {
      if ('8' + "x y" === ("x y")) {
        let v8 = "x y" + '1' + '\t\u00e9';
      }
    }
  }
  return (p1 + p3);
  let w9 = 1;
  while (w9 > 0) {
    w9 -= 1;
    let w10 = 1;
    while (w10 > 0) {
      w10 -= 1;
      console.log(!('a' === '\t\u00e9'), (1e17 <= 7) && '' !== '\t\u00e9');
      12;
    }
    if (p3 >= p2 * 1e22) {
      console.log(!(0 === 9) && 1e11 < 0, 3.85 - -9.91);
      console.log("x y");
      let v11 = false && false === (p1 > 11);
    }
    p3 %= 6;
  }
  for (let i12 = 0; i12 < 4; i12 += 1) {
    if (!(true || 13 <= 0)) {
      if (p1 === w9 + w9) {
        console.log('8');
        console.log('\t\u00e9');
      }
      console.log(true || 1e3 !== 1e8);
    } else {
      15303;
      console.log((true), (p3) - 36314 * i12, 'a');
      if (9.30 === i12 / p1) {
        let v13 = (true) && '6' !== '9';
      } else {
        p3 = 61226 + (4);
      }
    }
    58805;
  }
  return ((p3));
}
console.log(5.6 / 1e-6 / 2.55 % 3);
console.log(f0(0, 17 % 0, -43852));
console.log(false || ((16 < 11)));
console.log((0 >= 14) === !(12 <= 48172));
let v14 = '9';
f0((1e8), 2 % 1e8, 0);
let v15 = 33095;
let v16 = false;
