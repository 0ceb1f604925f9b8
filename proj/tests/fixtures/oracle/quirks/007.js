console.log(console.nope, console.log === console.log);
console.log('a' < 'b', 'B' < 'a', '10' < '9', 10 < 9, '10' < 9, 'abc' < 'abd');
console.log(true > false, null_like());
function null_like() {
  return;
}
