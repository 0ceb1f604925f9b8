let a = "unterminated;
console.log(a);
