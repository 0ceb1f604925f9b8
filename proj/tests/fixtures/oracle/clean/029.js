function f0(p1, p2) {
  let v3 = 0;
  return -(6.22 - p1);
}
if (false) {
  let w4 = 3;
  while (w4 > 0) {
    w4 -= 1;
    let w5 = 5;
    while (w5 > 0) {
      w5 -= 1;
      if (w4 <= (w4)) {
        f0((1e-5), (0));
        console.log(17 !== -19);
      }
      {
        f0(-2, -5.1);
        1e8;
      }
    }
    console.log(1e4);
  }
  let v6 = -1e20 * 74803;
} else {
  for (let i7 = 0; i7 < 3; i7 += 1) {
    let w8 = 0;
    while (w8 > 0) {
      w8 -= 1;
      console.log('\t\u00e9', ("x y") + '\t\u00e9', 9 % 1e14);
      if (38661 / 1e-6 <= i7 + w8) {
        let v9 = 4.83;
        console.log("x y", "x y");
        console.log(w8);
      } else {
        console.log((92999));
        let v10 = 7 * 8 % 17;
        let v11 = 'a' + '';
      }
    }
    console.log((30498));
    if (!("x y" !== '1')) {
      0;
    } else {
      let w12 = 1;
      while (w12 > 0) {
        w12 -= 1;
        let v13 = false;
        console.log(v13);
        f0(-0, 1e-3 - w12);
      }
      if (w8 !== f0((7), 48203 % 0)) {
        console.log(4 + w12 * 14);
        console.log(0);
        console.log(2324);
      } else {
        console.log();
      }
    }
  }
  let w14 = 2;
  while (w14 > 0) {
    w14 -= 1;
    if (0 < 1e18 || (1e8 === 5)) {
      if (!(w14 === 1e5) === 0 >= 0) {
        let v15 = !("x y" !== '');
        console.log(-(14 - 9.87));
        let v16 = 0;
      }
      console.log((13));
    }
    console.log(f0(w14 * w14, w14 + 1e-8), ('\t\u00e9') + 'a', 0 / 70408 - 79776 * 9);
  }
  if (w14 === w14) {
    let v17 = ('2');
    {
      for (let i18 = 0; i18 < 1; i18 += 1) {
        let v19 = 76997;
      }
      console.log(((0) - -w14));
      let v20 = ((v17));
    }
    console.log(('a'));
  }
}
for (let i21 = 0; i21 < 0; i21 += 1) {
  console.log((f0(f0(1e10 / i21, i21 * i21), i21 + 19)));
  f0((42005), 1e-3);
}
if ('1' !== "x y") {
  let w22 = 3;
  while (w22 > 0) {
    w22 -= 1;
    f0(w22, 18);
    console.log(f0(71633 / w22, 49017));
  }
} else {
  console.log(f0(1e5 + 0, f0(8.95 % 82869, 4.96)));
  let w23 = 2;
  while (w23 > 0) {
    w23 -= 1;
    console.log(-51952 <= -1e17, 20 === 15 === false || false);
    {
      if (true === 9 === 5.74 || 98662 >= w23) {
        let v24 = "x y" === '2';
        console.log(11 < 98486 === v24 === 8 > w23, v24, (w23 >= w23));
      } else {
        let v25 = ('4') === '7';
      }
    }
    for (let i26 = 0; i26 < 0; i26 += 1) {
      let w27 = 0;
      while (w27 > 0) {
        w27 -= 1;
        console.log(f0(0 - w23, 20 - i26), !(7 >= 1e19 && w23 !== w27), ('') + '6');
      }
    }
  }
}
for (let i28 = 0; i28 < 6; i28 += 1) {
  console.log((-(f0(f0((14), (i28)), 0 / 24149))));
  let v29 = 2.42 * 0 * i28 + i28;
  v29 /= f0((i28), 14);
}
let v30 = '6';
console.log(v30);
