function f0(p1, p2, p3) {
  p3 %= p3;
  return 0;
}
function f4() {
  if (false) {
    if ((10 === 56302) === false) {
      let w5 = 4;
      while (w5 > 0) {
        w5 -= 1;
        let v6 = (17148) === 52275 + 90709;
        console.log(1e14 > 93252 || w5 >= 11 && v6 || false);
        f0(w5 - 99949, 0, 10 + w5);
      }
      let w7 = 4;
      while (w7 > 0) {
        w7 -= 1;
        console.log((7 % w7));
      }
      let v8 = f0(8, 8, f0(1e20 % w7, w7 % w7, w7));
    }
    let w9 = 5;
    while (w9 > 0) {
      w9 -= 1;
      let w10 = 1;
      while (w10 > 0) {
        w10 -= 1;
        console.log(10 + 1e10 % -w10);
      }
    }
    console.log(5.22);
  }
  return -12;
}
let v11 = f4() / f4();
console.log("x y");
if ('' === 'a' && false) {
  console.log(7066);
  {
    console.log('a');
    v11 += (1e2);
  }
}
console.log();
let v12 = "x y";
console.log(v11 + 1e8);
