function f0(p1, p2, p3) {
  for (let i4 = 0; i4 < 5; i4 += 1) {
    1e20;
    if (p2 >= -p1) {
      for (let i5 = 0; i5 < 4; i5 += 1) {
        let v6 = -1e13 !== -0;
      }
    }
  }
  if (false && '\t\u00e9' !== 'a') {
    if (5 <= p2 === !false) {
      let v7 = ('') + '';
    }
    p3 *= p3 / 3.98;
  }
  console.log();
  let w8 = 5;
  while (w8 > 0) {
    w8 -= 1;
    let w9 = 0;
    while (w9 > 0) {
      w9 -= 1;
      {
        p3 /= 64436;
        let v10 = !(11 !== p3);
        8.36;
      }
    }
    for (let i11 = 0; i11 < 0; i11 += 1) {
      console.log('');
    }
  }
  return -(p3);
}
function f12(p13, p14) {
  p13 %= f0(0 - 1e-3, -6, 10);
  return (10) - p14;
}
function f15(p16) {
  {
    for (let i17 = 0; i17 < 4; i17 += 1) {
      let v18 = i17;
    }
    p16 += -(6 / p16);
    let w19 = 5;
    while (w19 > 0) {
      w19 -= 1;
      {
        console.log(!(0 > p16) === !false === 0 - 1e0 !== (1e18));
        console.log(19 / 6.35 / 5, '');
      }
      let w20 = 0;
      while (w20 > 0) {
        w20 -= 1;
        let v21 = '\t\u00e9' + '\t\u00e9' !== '4';
      }
    }
  }
  return 1e4;
}
let v22 = f0(4 / 0, -0, 9.78);
console.log((("x y")));
if (('a') !== ("x y")) {
  console.log(9 > (v22 - v22));
  if (!(41326 <= v22)) {
    console.log(0 < 0 / 2013, (15));
    for (let i23 = 0; i23 < 0; i23 += 1) {
      v22 *= 7 + (10);
      console.log();
    }
  }
}
if (!(v22 > 32677) === (true)) {
  let w24 = 1;
  while (w24 > 0) {
    w24 -= 1;
    console.log(true);
    console.log(0 * 1e-5 - 25530 * 17);
  }
} else {
  if ('' + '' !== '\t\u00e9') {
    {
      if (false === true === 40081 === 42173 && false) {
        let v25 = 1e1 === 4 / 19;
        let v26 = "x y";
        let v27 = '6';
      }
      if (true) {
        console.log('a');
        console.log(0, v22 > 17);
      }
      if (false) {
        f12(11 + v22, 0);
        console.log((('')) + '2' + "x y");
        console.log('9');
      } else {
        f0(5 * v22, -95809, 21906 / 0);
        f12(40087, (58577));
      }
    }
    if (49992 >= 1e8 && false || 9.51 >= 97341) {
      for (let i28 = 0; i28 < 5; i28 += 1) {
        console.log(i28 * 1e7 * 1e-8);
        console.log(3.50);
        v22 %= i28;
      }
      if (false) {
        console.log(-(f0(9 % 12, (16), 5 - v22)));
        console.log(false);
        v22 = v22;
      } else {
        f0(-v22, v22, (v22));
        let v29 = v22 === 3 || true || 0 < v22 === false;
      }
      if ((true)) {
        let v30 = '\t\u00e9';
        16;
      } else {
        console.log('' + 'a' + '3', '\t\u00e9' + ("x y"), (1e8) * 5 / v22);
        console.log();
      }
    } else {
      f12(14 - 15, v22 - 11);
      v22 %= 3;
    }
    console.log(('9'), false);
  }
  let w31 = 5;
  while (w31 > 0) {
    w31 -= 1;
    v22 = 62330 + f15(84896 - 2.66);
    console.log();
    for (let i32 = 0; i32 < 3; i32 += 1) {
      {
        console.log(1e14);
        f12(0, 1e13 * v22);
      }
      if (0 === 5.33 === 4.95 <= v22 === 15 !== i32) {
        console.log((!(v22 > v22)), "x y");
      } else {
        console.log(w31 / i32 - f15(26276 % 60603));
        let v33 = 1.61;
        console.log(f15((98327)));
      }
      for (let i34 = 0; i34 < 2; i34 += 1) {
        console.log(1e0);
      }
    }
  }
}
let w35 = 3;
while (w35 > 0) {
  w35 -= 1;
  let w36 = 0;
  while (w36 > 0) {
    w36 -= 1;
    let v37 = '' + 'a' !== '\t\u00e9';
    0;
  }
}
for (let i38 = 0; i38 < 0; i38 += 1) {
  for (let i39 = 0; i39 < 3; i39 += 1) {
    console.log('\t\u00e9');
    let w40 = 4;
    while (w40 > 0) {
      w40 -= 1;
      let w41 = 5;
      while (w41 > 0) {
        w41 -= 1;
        let v42 = '\t\u00e9';
        console.log(18);
        console.log(1e-3 - w35);
      }
    }
    let v43 = 4.91;
  }
}
for (let i44 = 0; i44 < 5; i44 += 1) {
  f0(16, 32310 * 1020, (30789));
}
