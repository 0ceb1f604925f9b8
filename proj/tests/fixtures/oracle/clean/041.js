function f0(p1, p2) {
  for (let i3 = 0; i3 < 4; i3 += 1) {
    console.log(2.90 / 1e14 * 1e-7);
    65652;
    if (!(false)) {
      let v4 = (i3);
    }
  }
  if ('a' !== "x y") {
    return -p1;
  } else {
    86729;
    if (12 !== 0) {
      for (let i5 = 0; i5 < 2; i5 += 1) {
        let v6 = 1e8 / 1e13 !== 5.41;
        console.log(6);
      }
      if ((9.53 > 0)) {
        let v7 = 8 <= p1 && true === true || false;
        console.log();
      }
    }
    let v8 = true || 1e4 < 4.33 === true || false;
  }
  console.log(-1.96 > p1, p1, ("x y" + "x y"));
  return -(1e-3 / 6);
}
function f9(p10, p11) {
  if (!false) {
    let w12 = 0;
    while (w12 > 0) {
      w12 -= 1;
      console.log(-(9.95), 17 * (22018), 4);
    }
  }
  if (true) {
    console.log(-p11 > 0);
  } else {
    console.log(p10);
    {
      let w13 = 5;
      while (w13 > 0) {
        w13 -= 1;
        p11 += 0 * 20 - 0 * 2.95;
      }
      if (false) {
        console.log('\t\u00e9' + '0' + '\t\u00e9');
        f0(f0(f0(p11 / 1e16, 0), (0)), p11 % p11);
      }
      let v14 = !(!(p11 <= 9));
    }
  }
  return f0(1e14 % p10, p11 % 6.80);
}
function f15() {
  f9(3.21, f9(16 / 0, 18 * 98304));
  let v16 = "x y";
  for (let i17 = 0; i17 < 1; i17 += 1) {
    console.log("x y" + v16 + '');
    let v18 = 1e22 % 0 - (i17);
  }
  for (let i19 = 0; i19 < 1; i19 += 1) {
    if (true) {
      v16 = v16 + '5' + '1';
      let v20 = true;
      for (let i21 = 0; i21 < 2; i21 += 1) {
        let v22 = ('\t\u00e9') + ('');
        let v23 = !!v20;
      }
    } else {
      for (let i24 = 0; i24 < 4; i24 += 1) {
        console.log();
      }
      3.32;
      console.log((18) * 1e12 / i19);
    }
    {
      console.log(1e2);
      f9(3, -0);
    }
  }
  return 75530 - 2;
}
f0(39538 * 8, (7.5));
console.log('a', 'a');
{
  console.log(('\t\u00e9') + '' + '7', !false, false);
  let v25 = (('\t\u00e9'));
}
for (let i26 = 0; i26 < 2; i26 += 1) {
  console.log(1e8, -(i26 - 87215), '');
  console.log();
  let v27 = 5.39 < 0 === '\t\u00e9' === '\t\u00e9';
}
for (let i28 = 0; i28 < 1; i28 += 1) {
  {
    console.log(i28);
  }
}
if ((16174 < 276 && false)) {
  console.log('\t\u00e9');
  console.log(0);
  console.log(-0 - f15());
} else {
  {
    f9(-0, 0 + 0);
  }
  if (false) {
    1;
    for (let i29 = 0; i29 < 4; i29 += 1) {
      let v30 = -(i29 - i29);
      f9(-v30, 3);
      console.log(-v30 / 14, v30 % 69039 % f9(0, 5.14));
    }
    for (let i31 = 0; i31 < 2; i31 += 1) {
      1e-6;
    }
  }
}
let v32 = '1' + "x y" + ('0');
if (((false))) {
  console.log(1e-1 * (1e20) - f9(-0, 4.11 + 6) * -1e8);
  f9(4 + 1, 7);
} else {
  console.log('' !== 'a' + v32);
}
if (true === true === false) {
  v32 += '';
} else {
  {
    if ('a' + '7' !== "x y" + '') {
      if (1 + 8.34 !== 1e4 + 30291) {
        let v33 = f9(12 - 1e-5, 4 / 1) + -0;
        v33 /= f15() + (8.69);
      }
    }
  }
}
