function f0(p1, p2) {
  if (-1 <= 8) {
    let v3 = ('a') + '';
  } else {
    if (6.51 === p1 - 1e-3) {
      console.log();
    }
    p1 /= -p1 % p2 + 11560;
  }
  p2 -= (p2) / 6.75 % 89660;
  p2 = -(6 - 16);
  for (let i4 = 0; i4 < 1; i4 += 1) {
    let w5 = 1;
    while (w5 > 0) {
      w5 -= 1;
      console.log('3', ("x y" + 'a'));
      let v6 = "x y";
      let w7 = 4;
      while (w7 > 0) {
        w7 -= 1;
        console.log(0 - p1 - 1e21 % 0);
        let v8 = (v6);
        1e9;
      }
    }
    for (let i9 = 0; i9 < 4; i9 += 1) {
      if (true) {
        console.log();
        console.log(false);
        console.log('a', ('1' + "x y"));
      }
    }
    let v10 = ('\t\u00e9') + 'a' + 'a';
  }
  return (15) % 9;
}
function f11(p12) {
  if (20 % 0.33 < p12 + p12) {
    for (let i13 = 0; i13 < 2; i13 += 1) {
      let w14 = 1;
      while (w14 > 0) {
        w14 -= 1;
        let v15 = (('8'));
      }
      let w16 = 0;
      while (w16 > 0) {
        w16 -= 1;
        return (p12);
      }
    }
  } else {
    let w17 = 1;
    while (w17 > 0) {
      w17 -= 1;
      console.log(1e-2 + 3 * 79743);
    }
    let v18 = (('\t\u00e9'));
  }
  return -(6 + 6);
}
for (let i19 = 0; i19 < 0; i19 += 1) {
  console.log(-f11(3.88));
  let w20 = 5;
  while (w20 > 0) {
    w20 -= 1;
    console.log(1e-2 < 4 === 0 < w20 || true, '6' + '4' + '', (7 / 1e0));
  }
  if (false) {
    console.log(f11(w20 - 16) >= w20);
  } else {
    if (1 / w20 >= f0(-7.18, -i19)) {
      let v21 = '' === "x y" && 1e19 > 6;
      for (let i22 = 0; i22 < 4; i22 += 1) {
        console.log(1e3 + 0 + 1.37);
        let v23 = ('');
      }
    }
    for (let i24 = 0; i24 < 1; i24 += 1) {
      console.log('');
      let w25 = 3;
      while (w25 > 0) {
        w25 -= 1;
        console.log(1.41);
        console.log(0);
      }
    }
  }
}
f0(-1e16, (1e8));
for (let i26 = 0; i26 < 1; i26 += 1) {
  console.log(!((i26 <= 9)));
  console.log(9.67);
  if (7 === 1e7 === true === false) {
    {
      for (let i27 = 0; i27 < 4; i27 += 1) {
        console.log(f0((2.78), 3 - 7.89) === 1e6);
        console.log(i26 === 1e-5 + 36211);
        let v28 = 1e6;
      }
      let v29 = i26 <= -i26;
    }
  } else {
    console.log(17, false && i26 > 4 || '\t\u00e9' !== 'a', (-1e16));
    if (true && i26 > 19 === false) {
      for (let i30 = 0; i30 < 1; i30 += 1) {
        console.log('\t\u00e9' + "x y" + ('') + 'a');
      }
      let w31 = 4;
      while (w31 > 0) {
        w31 -= 1;
        let v32 = ('\t\u00e9' + '5');
        console.log(false || true && false);
      }
      let v33 = ('');
    }
    console.log(-(f11(0 * 9)));
  }
}
console.log(3 + 64679 < 1e7 / 0);
console.log(6.97, ('' + "x y"), (32355) <= -0);
f11(3.17 * 6);
console.log('');
if ('a' !== ('\t\u00e9')) {
  console.log(('') + 'a' + '');
}
{
  let v34 = false;
}
console.log(false);
