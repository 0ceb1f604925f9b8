let x = 1;
let y = 2;
x = y = 5;
console.log(x, y);
x += y -= 1;
console.log(x, y);
x /= 4;
console.log(x);
x %= 1;
console.log(x);
