0.45;
let v0 = "x y" !== '\t\u00e9';
if ((v0 || true)) {
  if (17 !== 8.87 === 5 > 0 || true) {
    console.log('\t\u00e9');
    for (let i1 = 0; i1 < 6; i1 += 1) {
      if (true) {
        console.log(0, true && v0 === v0);
      }
      v0 = i1 !== 11300 === true && 96402 <= 9;
    }
    let w2 = 2;
    while (w2 > 0) {
      w2 -= 1;
      let v3 = ((w2));
      0;
    }
  }
  console.log((('')), (58658 >= 16), 'a' + '\t\u00e9' + ('\t\u00e9'));
} else {
  console.log('3' + ('\t\u00e9') + ("x y"));
  let w4 = 0;
  while (w4 > 0) {
    w4 -= 1;
    let w5 = 2;
    while (w5 > 0) {
      w5 -= 1;
      console.log(-(7.8 / 1));
      console.log(w4);
    }
    let v6 = w5 * 1e14 + (4);
    let v7 = w4;
  }
  let w8 = 3;
  while (w8 > 0) {
    w8 -= 1;
    console.log('\t\u00e9', 3670, (w8) * -0);
    if (w8 + 2.56 < w4) {
      console.log((''));
    }
    let v9 = "x y";
  }
}
for (let i10 = 0; i10 < 1; i10 += 1) {
  let v11 = 2.82 !== i10 / i10;
  if ((20 === 4)) {
    if ((!(i10 > 1e16))) {
      if (true) {
        let v12 = !v11;
      } else {
        let v13 = 18;
        1.95;
      }
      if (!((44903 > i10))) {
        console.log(-6.12);
        let v14 = ('8');
        console.log();
      }
      if (i10 >= 1.56 === v11 && 1e6 <= 1) {
        let v15 = '';
        18;
      }
    } else {
      console.log(1e-7 / -5.42, i10 !== -0);
      let v16 = -5 !== 9;
    }
  }
}
console.log(('a'));
let v17 = '\t\u00e9' !== '' || !(4 !== 4.39);
for (let i18 = 0; i18 < 6; i18 += 1) {
  {
    let v19 = (i18) * -i18;
  }
  {
    if (1 !== 1e3) {
      if ((v17)) {
        0;
        v17 = true;
      }
      console.log();
    } else {
      let w20 = 1;
      while (w20 > 0) {
        w20 -= 1;
        let v21 = -14 + 1e-2 + 2.60;
        console.log((4249 % -8.12));
      }
    }
  }
  15;
}
console.log(5.98 % -7);
let v22 = 1e-7 / 1e6 < 1e-7 + 0.63;
